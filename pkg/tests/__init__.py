"""
Boolean Function Bialgebra Tests
"""
