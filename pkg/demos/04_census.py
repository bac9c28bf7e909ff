"""Small semigroups up to isomorphism, grouped by their PA monoids."""
from pamona import props
from pamona.census import census, pa_classes

for n in (1, 2, 3):
    c = census(n)
    part = pa_classes(c)
    print(f"order {n}: {len(c)} semigroups, {len(part.classes)} PA classes")
    for cls in part.classes:
        if len(cls) > 1:
            print("   shared PA:", cls)

# Closed classes never split a PA class.
c = census(3)
part = pa_classes(c)
for name, pred in props.PA_CLOSED_CLASSES.items():
    mixed = [cls for cls in part.classes if len({pred(c.members[i]) for i in cls}) > 1]
    print(f"{name}: {'closed' if not mixed else mixed}")
