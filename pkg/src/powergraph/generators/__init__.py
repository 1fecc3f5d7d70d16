"""
Geradores: famílias G_m/H_m, grafos de Cayley de Z_p e regulares aleatórios.
"""
