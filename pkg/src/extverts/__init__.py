"""Ext characters, Jack polynomials and vertex operators on Hilb(C^2, n)."""
