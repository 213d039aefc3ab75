"""Censuses of potency classes over Z/p, and split witnesses.

Exhaustive runs classify every coordinate tuple; sampled runs draw from the
documented SplitMix64 stream, so any seed reproduces the same census
anywhere.
"""

from kpotent import (
    OctAlgebra,
    PrimeField,
    QuatAlgebra,
    census_to_csv,
    search_exhaustive,
    search_sample,
    split_witness,
)

H3 = QuatAlgebra(PrimeField(3), -1, -1)
print("exhaustive census of H(-1,-1) over F3 (81 elements):")
print(census_to_csv(search_exhaustive(H3)))

O3 = OctAlgebra(PrimeField(3), -1, -1, -1)
rows = search_exhaustive(O3)
print("octonion census over F3 (6561 elements):")
for r in rows:
    print(f"  {r.kind:<10} index {r.index:>2}  count {r.count:>5}")

# -- sampling: reproducible draws -----------------------------------------------------

O13 = OctAlgebra(PrimeField(13), -1, -1, -1)
sample = search_sample(O13, budget=20000, seed=42)
print("\nsampled census over F13 (20000 draws, seed 42):")
for r in sample[:6]:
    print(f"  {r.kind:<10} index {r.index:>3}  count {r.count:>6}  sample {r.sample}")
print("  ...")
assert search_sample(O13, budget=20000, seed=42) == sample  # same seed, same census

# -- split witnesses -------------------------------------------------------------------

for alg in (QuatAlgebra(PrimeField(5), -1, -1), O3):
    w = split_witness(alg)
    print(f"\nnorm-zero witness in {alg}: {w}  (norm {w.norm()})")
print("every quaternion algebra over an odd prime field is split.")
