# k3census/cli/commands/__init__.py
from . import analyze, classify, enumeration, h0, lattice, moduli, verify

COMMANDS = [analyze, enumeration, verify, classify, h0, moduli, lattice]
