"""
Cotas inferiores exatas (racionais) e vereditos por teorema.
"""
