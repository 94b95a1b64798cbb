"""
Vertex-deletion spectra, R_m ratios and closed-form verification.
"""
