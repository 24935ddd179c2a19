"""Qudit Floquet codes on three-colorable lattices.

Subpackage map:

- ``pauli``      exact n-qudit generalized Pauli arithmetic over prime D
- ``stabilizer`` generator sets, canonical tableaux, measurement updates
- ``lattice``    three-colorable {p,3} lattices, tori and file fixtures
- ``floquet``    check assignments, schedules, ISG traces, code parameters
- ``logical``    loop logical operators, pairing, distance bounds
- ``noise``      Pauli-frame error injection and space-time syndromes
- ``cli``        command-line entry point
"""

from floqudit.pauli import Pauli, commutation
from floqudit.stabilizer import GeneratorSet, measure

__all__ = ["Pauli", "commutation", "GeneratorSet", "measure"]
