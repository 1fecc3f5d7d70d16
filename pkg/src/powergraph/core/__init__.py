"""
Núcleo: grafo, formato de lista de arestas e potências.
"""
