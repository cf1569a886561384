"""Checker modules; importing one registers its checkers."""
