"""Does T_1^perp see the parameter c?

For each (k, s) over GF(2) this prints dim T_1^perp and the fingerprint of
Z/T_1^perp for c = 0 and c = 1, so the two algebras can be told apart (or not)
by their first Kulshammer ideal alone.
"""
from kuelsh import FamilyParams, FieldSpec, analyze
from kuelsh.grids import KS_GRID

K = FieldSpec.gf(2)

print(f"{'(k,s)':>7}  {'c=0':>24}  {'c=1':>24}  differ")
for k, s in KS_GRID:
    row = []
    for c in (K.zero, K.one):
        step = analyze(FamilyParams.q2b(K, k, s, K.one, c), n_max=1).ladder[1]
        q = step.quotient
        row.append(f"perp {step.t_perp_dim}, Z/perp {q['total_dim']} soc {q['socle_dim']}")
    print(f"{str((k, s)):>7}  {row[0]:>24}  {row[1]:>24}  {'yes' if row[0] != row[1] else 'no'}")
