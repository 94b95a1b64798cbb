"""
Parameter sweeps for H tuples with a prescribed deletion difference.
"""
