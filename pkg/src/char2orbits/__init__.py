"""Nilpotent coadjoint orbits of classical groups in characteristic 2.

Submodules:

    finite_field    GF(2^e) arithmetic on int-encoded elements
    linalg          dense matrices over GF(2^e) (numpy uint8 + lookup tables)
    combinatorics   partitions, orbit-label sets, counts, fanout
    classical       symplectic / orthogonal Lie algebras, Borels, dual spaces
    form_modules    form modules, normal forms, closed-field classification
    isometry        backtracking isometry search between formed spaces
    odd_split       odd orthogonal splitting into chain + symplectic part
    centralizers    centralizer dimensions, component ranks, group orders
    oracle          brute-force orbit enumeration over GF(2) and GF(4)
    verify          acceptance checks runnable from the CLI or tests
    cli             command line front end
"""

from .finite_field import Field, field_for

__all__ = ["Field", "field_for"]
__version__ = "0.1.0"
