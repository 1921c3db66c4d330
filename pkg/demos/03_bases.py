"""
Bases of classically-defined classes inside the deletion orders.

The avoiders of any classical pattern set form a downward-closed family
in each deletion order, so they are cut out by a finite antichain of
minimal violators; searching up to twice the largest pattern size finds
all of them.  The size-3 table is the standard reference point.
"""
from invpat.classes import PatternSet, compute_basis
from invpat.containment import Mode
from invpat.core import parse_perm

for word in ("123", "132", "213", "231", "321"):
    ps = PatternSet([parse_perm(word)], Mode.CLASSICAL)
    for ambient in (Mode.I, Mode.F):
        report = compute_basis(ps, ambient)
        elems = " ".join("".join(map(str, p)) for p in report.all_elements())
        print(f"{word} in {ambient.value:<2}: {elems}")

print()
report = compute_basis(PatternSet([parse_perm("123")], Mode.CLASSICAL), Mode.F)
print(report.to_text())

print("\nmachine rows:")
print("\n".join(report.to_rows()))

# a set with a surprise: the class of 12-avoiders also excludes the
# crossing matching 3412, whose only deletion image is 21
print()
report = compute_basis(PatternSet([parse_perm("12")], Mode.CLASSICAL), Mode.I)
print(report.to_text())
