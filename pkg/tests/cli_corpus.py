"""Command lines exercised by the determinism checks; each is rendered in all three formats."""

CORPUS = [
    ["check", "examples/ex217.alia", "--law", "nijenhuis-bialgebra"],
    ["check", "examples/ex217.alia", "--law", "nijenhuis-bialgebra", "--override", "S=identity"],
    ["check", "examples/ex217.alia", "--law", "nijenhuis-bialgebra", "--override", "S=zero"],
    ["check", "missing.alia", "--law", "left-alia"],
    ["check", "examples/ex217.alia", "examples/ex314.alia", "examples/ex511.alia",
     "examples/ab2.alia", "examples/sl2.alia", "examples/dual2.alia", "--set", "lambda=2",
     "--law", "left-alia", "--law", "nijenhuis", "--law", "ybe", "--law", "symplectic",
     "--law", "left-alia-coalgebra", "--law", "co-ybe"],
    ["check", "examples/ex314.alia", "--law", "r-nijenhuis-coproduct", "--law", "s-admissible",
     "--law", "matched-pair", "--law", "semidirect-admissible", "--rep", "dual-adjoint",
     "--override", "alpha=identity", "--override", "beta=zero"],
    ["check", "examples/dual2.alia", "--law", "special-bialgebra", "--law", "d-bialgebra",
     "--law", "nijenhuis-d-compat"],
    ["certify", "examples/ex511.alia", "--law", "nijenhuis-algebra", "--law", "symplectic",
     "--law", "cosymplectic"],
    ["certify", "examples/ex511.alia", "--law", "nijenhuis-algebra",
     "--override", "N=lambda^2*(3<-4) + lambda*(1<-1)"],
    ["certify", "examples/ex511.alia", "--law", "nijenhuis-algebra",
     "--override", "N=(lambda-2)*(1<-3)"],
    ["construct", "double", "examples/ex217.alia"],
    ["construct", "t-sharp-lift", "examples/ex314.alia", "--override", "T=identity"],
]

FORMATS = ("text", "tsv", "json")
