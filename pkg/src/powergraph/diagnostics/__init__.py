"""
Diagnóstico para grafos com laços: vértices suficientes, classes de
insuficientes e auditoria das afirmações da prova.
"""
