"""arithdyn: exact computations for dynamics of self-maps of P^1 and P^n.

Periodic loci of projective-linear automorphisms, preperiodicity via
canonical heights, composition-semigroup relation search, and p-adic
residue-disc machinery, all in exact rational arithmetic.
"""

__version__ = "0.1.0"
