"""Contains the complete test suite for Gauss-SquareFree using pytest."""
