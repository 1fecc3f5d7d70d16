"""
Orquestração dos subcomandos do powergraph.
"""
