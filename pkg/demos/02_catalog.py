# Every group of the table, straight from the catalog file.

from collections import Counter

from gcob import load_catalog

cat = load_catalog()
print(len(cat.entries), "entries from", cat.path)

by_order = Counter(e.order for e in cat.entries)
for n in sorted(by_order):
    names = [e.name for e in cat.entries if e.order == n]
    print(f"{n:>3}: {', '.join(names)}")

# perms entries carry defining relations that must hold
for name in ("SL(2,3)", "Metacyclic20", "Z_3^2_sd_Z_3"):
    e = cat.entry(name)
    G = cat.by_name(name)
    print(name, G.order, e.relations, "failing:", cat.check_relations(name))
