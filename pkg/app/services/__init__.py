"""
Computation services: spectrum, indices, families, theorem verifier, oracle
"""
