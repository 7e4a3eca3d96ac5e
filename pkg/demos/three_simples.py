"""Walk through the three-simple family B(d) in characteristic 2.

Over GF(4) every d is a square; over GF(2)(t) the parameter d = t is not.
The interesting number is dim T_1^perp / R, the part of the first
Kulshammer ideal that the Reynolds ideal does not already account for.
"""
from kuelsh import FamilyParams, FieldSpec, analyze, build_family, center

for field, d in [("gf:4", "g"), ("gf:4", "g+1"), ("rat:2", "t"), ("rat:2", "t^2")]:
    K = FieldSpec.from_text(field)
    P = FamilyParams.q3a(K, K.parse(d))
    r = analyze(P)
    print(f"d = {d} over {K.describe()}")
    print(f"  dim B = {r.algebra_dim}, dim Z = {r.center_dim}, cartan {r.cartan}")
    print(f"  T_n^perp dims: {[s.t_perp_dim for s in r.ladder]}, reynolds {r.reynolds_dim}")
    print(f"  dim T_1^perp / R = {r.t1perp_mod_reynolds_dim}")
    print(f"  closed forms: {r.status}")
    for c in r.expectation["checks"]:
        if not c["ok"]:
            print(f"    {c['name']}: expected {c['expected']}, computed {c['computed']}")

# which multiple of eta.delta makes beta.gamma + gamma.beta central?
K = FieldSpec.rational(2)
t = K.gen()
B = build_family(FamilyParams.q3a(K, t))
Z = center(B)
for lam in (t, 1 / t):
    x = B.word(f"beta.gamma + gamma.beta + [{lam}]*eta.delta")
    print(f"beta.gamma + gamma.beta + ({lam}) eta.delta central: {x.coords in Z}")
