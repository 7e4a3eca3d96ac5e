"""Run the pipeline on algebras outside the two families.

The quiver text format is the same one ``kuelsh custom --quiver FILE`` reads.
"""
from kuelsh import analyze, build_quotient, parse_quiver_text, render

KLEIN_FOUR = """
# group algebra of C2 x C2 over GF(2): x = g - 1, y = h - 1
field gf:2
vertex 1
arrow x 1 1
arrow y 1 1
rel x^2 = 0
rel y^2 = 0
rel x.y = y.x
loewy 3
"""

TRUNCATED = """
field rat:2
vertex 1
arrow x 1 1
rel x^4 = 0
loewy 4
"""

for name, text in [("K[C2 x C2]", KLEIN_FOUR), ("GF(2)(t)[x]/x^4", TRUNCATED)]:
    print(f"== {name}")
    A = build_quotient(parse_quiver_text(text))
    print(render(analyze(A), "text").decode())
