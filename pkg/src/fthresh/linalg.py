"""Incremental row echelon form over F_p for sparse vectors (dicts)."""


class Echelon:
    def __init__(self, p):
        self.p = p
        self.rows = []  # (pivot, row) with row[pivot] == 1

    def __len__(self):
        return len(self.rows)

    @property
    def rank(self):
        return len(self.rows)

    def reduce(self, v):
        p = self.p
        v = {k: c % p for k, c in v.items() if c % p}
        for piv, row in self.rows:
            c = v.get(piv)
            if c:
                for k, x in row.items():
                    nv = (v.get(k, 0) - c * x) % p
                    if nv:
                        v[k] = nv
                    else:
                        v.pop(k, None)
        return v

    def add(self, v):
        """Insert v; return True if it was independent of the current rows."""
        r = self.reduce(v)
        if not r:
            return False
        piv = min(r)
        inv = pow(r[piv], -1, self.p)
        self.rows.append((piv, {k: c * inv % self.p for k, c in r.items()}))
        return True
