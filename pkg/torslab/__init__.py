"""Torsion classes, wide subcategories and semibricks of Nakayama algebras."""

__version__ = "0.1.0"
