"""Where the identification stops: weight 8, homological degree 1.

The source of the comparison is an F_2-vector space, so every element has
order at most 2.  But the degree-1 homology at weight 8 contains 4-torsion
(a torsion product of two divided squares sits inside its cross-effect),
so no map from the source can be an isomorphism.  The map itself is still
perfectly well defined.
"""

from derham.comparison import f18_counterexample
from derham.complexes import homology_of

for rank in (1, 2, 3):
    report = f18_counterexample(rank)
    print(f"rank {rank}:")
    print("   source dimension:", report["source_dimension"],
          " exponent:", report["source_exponent"])
    print("   H_1 invariants:", report["target_invariants"])
    print("   4-torsion present:", report["contains_order4"])
    print("   map well defined:", report["map_well_defined"],
          " iso:", report["map_is_iso"])

# On a single generator there is no cross-effect and nothing breaks;
# from rank 2 on, the homology is strictly bigger than the source.
print("\nfull degree-1 homology at weight 8:")
for rank in (1, 2, 3):
    print(f"   rank {rank}:", homology_of("C", 8, rank).invariants(1))
