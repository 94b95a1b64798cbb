"""
The H(n, k, l, n0, t0) construction, its closed forms and the named families.
"""
