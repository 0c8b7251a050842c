"""Laplacian polynomials and Kirchhoff indices of graphs derived from regular graphs."""
