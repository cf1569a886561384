"""Checker lab: configs, registry, sweeps and reports."""
