"""
powergraph - potências de grafos, famílias extremais e auditoria de cotas
"""

__version__ = "0.1.0"
