"""Move-by-move derivations of the monodromy words for N_n, M_k and Y_p, and
of the square identities used to match them with Milnor open books.

Each builder returns a :class:`Derivation` whose words are meant to be
checked independently by :func:`verify_derivation`; the builder itself only
applies the moves it is told to.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .models import surface_model
from .rewrite import COMMUTE, FREE, ROTATE, verify_derivation, DerivationVerdict
from .surface import SurfaceModel
from .words import Word, format_word, inverse, parse_word


@dataclass
class Derivation:
    surface: str
    words: list[Word]
    claims: list[str] = field(default_factory=list)
    # indices of the checkpoint words; steps between them are single moves
    milestones: list[int] = field(default_factory=list)

    @property
    def model(self) -> SurfaceModel:
        return surface_model(self.surface)

    @property
    def current(self) -> Word:
        return self.words[-1]

    def _push(self, w: Word, claim: str) -> "Derivation":
        self.words.append(w)
        self.claims.append(claim)
        return self

    def mark(self) -> "Derivation":
        self.milestones.append(len(self.words) - 1)
        return self

    # -- moves -------------------------------------------------------------
    def rule(self, name: str, at: int, reverse: bool = False) -> "Derivation":
        rel = self.model.relation(name)
        left, right = (rel.right, rel.left) if reverse else (rel.left, rel.right)
        w = self.current
        if w[at:at + len(left)] != left:
            raise ValueError(f"{name} does not match {format_word(w)} at {at}")
        return self._push(w[:at] + right + w[at + len(left):], name)

    def swap(self, at: int) -> "Derivation":
        w = self.current
        return self._push(w[:at] + (w[at + 1], w[at]) + w[at + 2:], COMMUTE)

    def rotate(self, k: int) -> "Derivation":
        """Move the first ``k`` letters to the end (``k < 0``: last ``-k`` to the front)."""
        w = self.current
        return self._push(w[k:] + w[:k], ROTATE)

    def insert_pair(self, at: int, name: str, sign: int = -1) -> "Derivation":
        w = self.current
        return self._push(w[:at] + ((name, sign), (name, -sign)) + w[at:], FREE)

    def cancel(self, at: int) -> "Derivation":
        w = self.current
        a, b = w[at], w[at + 1]
        if a[0] != b[0] or a[1] != -b[1]:
            raise ValueError(f"letters at {at} do not cancel")
        return self._push(w[:at] + w[at + 2:], FREE)

    def carry(self, src: int, dst: int) -> "Derivation":
        """Move the letter at ``src`` to index ``dst`` by adjacent swaps."""
        step = 1 if dst > src else -1
        i = src
        while i != dst:
            self.swap(min(i, i + step))
            i += step
        return self

    def sort_to(self, target: Word) -> "Derivation":
        """Reach a rearrangement ``target`` of the current word by adjacent swaps."""
        if sorted(self.current) != sorted(target):
            raise ValueError("target is not a rearrangement of the current word")
        for i, letter in enumerate(target):
            j = self.current.index(letter, i)
            self.carry(j, i)
        return self

    def verify(self) -> DerivationVerdict:
        if len(self.words) == 1:
            return DerivationVerdict(True)
        return verify_derivation(self.words, self.model, claims=self.claims)

    def milestone_words(self) -> list[Word]:
        return [self.words[i] for i in self.milestones]


def _w(text: str) -> Word:
    return parse_word(text)


def _deltas(names: list[str]) -> str:
    return " ".join(names)


def phi_n(n: int) -> Derivation:
    """alpha2 gamma^2 beta^2 alpha1 D  ~>  (alpha1 alpha2 beta)^2 D on N_n,
    D = delta1 ... delta_{n-2}."""
    dl = [f"delta{i}" for i in range(1, n - 1)]
    d = len(dl)
    D = _deltas(dl)
    der = Derivation(f"N{n}", [_w(f"alpha2 gamma^2 beta^2 alpha1 {D}")]).mark()
    der.rule("slide-gamma", 2).rule("slide-gamma", 1).mark()
    der.rule("braid-alpha1-beta", 3).mark()
    # conjugate the trailing beta to the front
    der.carry(5, 5 + d).rotate(-1).mark()
    der.rule("braid-alpha2-beta", 0, reverse=True).mark()
    der.swap(2).carry(5, 5 + d).rotate(-1).mark()
    return der


def phi_k(k: int) -> Derivation:
    """M_k monodromy on the four-holed torus, checkpointed after each relation block."""
    D = "delta1 delta2 delta3"
    der = Derivation("four-holed-torus",
                     [_w(f"alpha1 gamma2 gamma1^{k + 1} beta1 beta alpha2 {D}")]).mark()
    b1 = 2 + (k + 1)
    der.swap(b1)
    for i in range(k + 1):
        der.rule("slide-gamma1", b1 - 1 - i)
    der.rule("slide-gamma2", 1).mark()
    # alpha1 beta alpha4 alpha3^{k+1} beta1 alpha2 D
    alpha2_at = 3 + (k + 1) + 1
    der.insert_pair(alpha2_at + 1, "alpha3").mark()
    der.rule("slide-beta1", alpha2_at - 1).mark()
    # alpha1 beta alpha4 alpha3^{k+1} alpha2 alpha3^-1 beta alpha3 D
    last_a3 = 3 + k
    der.swap(last_a3).cancel(last_a3 + 1).mark()
    der.carry(3 + k, 3).mark()
    return der


def phi_p(p: int) -> Derivation:
    """alpha2 gamma^3 beta^(p+1) alpha1 delta  ~>
    (alpha2 beta)^2 (alpha1 beta)^2 beta^(p-2) delta on the two-holed torus."""
    der = Derivation("two-holed-torus", [_w(f"alpha2 gamma^3 beta^{p + 1} alpha1 delta")]).mark()
    der.rule("slide-gamma", 3).rule("slide-gamma", 2).rule("slide-gamma", 1).mark()
    # alpha2 beta alpha1^3 beta^p alpha1 delta
    n = len(der.current)
    der.swap(n - 2)                 # alpha1 past delta
    der.swap(n - 4 + 1)             # last beta past delta
    der.rotate(-2)                  # beta alpha1 to the front
    der.swap(1)                     # alpha1 alpha2 -> alpha2 alpha1
    der.rule("braid-alpha1-beta", 2)
    der.rule("braid-alpha2-beta", 0, reverse=True)
    der.rule("braid-alpha1-beta", 3).mark()
    return der


def square_n(n: int) -> Derivation:
    """((alpha1 alpha2 beta)^2 D)^2  ~>  delta_{n-1} x delta1^2 ... delta_{n-2}^2."""
    dl = [f"delta{i}" for i in range(1, n - 1)]
    core = _w("alpha1 alpha2 beta " * 2)
    w = core + _w(_deltas(dl))
    der = Derivation(f"N{n}", [w + w]).mark()
    d = len(dl)
    # push the first delta block to the right of the second core
    for j in range(d - 1, -1, -1):
        der.carry(6 + j, 12 + j)
    der.rule("two-holed-torus", 0)
    tail = " ".join(f"{x} {x}" for x in dl)
    head = f"delta{n - 1} x" if d else f"delta{n - 1}"
    der.sort_to(_w(f"{head} {tail}")).mark()
    return der


def reduction(k: int, s: int) -> Derivation:
    """alpha2^s alpha4^(k-s) Y alpha2^s alpha4^(k-s)  ~>  Y alpha2^k alpha4^k,
    Y = beta alpha2 alpha4 beta."""
    pre = [("alpha2", 1)] * s + [("alpha4", 1)] * (k - s)
    Y = _w("beta alpha2 alpha4 beta")
    der = Derivation("four-holed-torus", [tuple(pre) + Y + tuple(pre)]).mark()
    _push_through_y(der, len(pre))
    der.sort_to(Y + _w(f"alpha2^{k} alpha4^{k}") if k else Y).mark()
    return der


def _push_through_y(der: Derivation, m: int, offset: int = 0) -> None:
    """Move the ``m`` letters before ``Y`` (which starts at ``offset + m``) to
    its right, each alpha2 turning into alpha4 and vice versa."""
    for i in range(m - 1, -1, -1):
        at = offset + i
        if der.current[at][0] == "alpha2":
            der.rule("braid-alpha2-beta", at)          # a2 b a2 -> b a2 b
            der.rule("braid-alpha4-beta", at + 2, reverse=True)
        else:
            der.swap(at + 2)                           # a4 b a2 a4 b -> a4 b a4 a2 b
            der.rule("braid-alpha4-beta", at)
            der.rule("braid-alpha2-beta", at + 2, reverse=True)
            der.swap(at + 1)


def square_k(k: int, s: int) -> Derivation:
    """(D X alpha2^s alpha4^(k-s))^2  ~>  delta1^3 delta2^3 delta3^3 delta4 alpha2^k alpha4^k,
    D = delta1 delta2 delta3, X = alpha1 alpha3 beta alpha2 alpha4 beta."""
    P = [("alpha2", 1)] * s + [("alpha4", 1)] * (k - s)
    D = _w("delta1 delta2 delta3")
    X = _w("alpha1 alpha3 beta alpha2 alpha4 beta")
    w = D + X + tuple(P)
    der = Derivation("four-holed-torus", [w + w]).mark()
    m = len(w)
    # second D block to positions 3..5
    for j in range(3):
        der.carry(m + j, 3 + j)
    # D D X P X P: move alpha1 alpha3 of the second X left over P
    base = 6 + 6
    for j in range(2):
        der.carry(base + len(P) + j, base + j)
    # D D X alpha1 alpha3 P Y P
    _push_through_y(der, len(P), offset=base + 2)
    der.sort_to(der.current[:base + 2 + 4] + _w(f"alpha2^{k} alpha4^{k}") if k else der.current)
    der.rule("four-holed-torus", 6)
    der.sort_to(_w("delta1^3 delta2^3 delta3^3 delta4") + (_w(f"alpha2^{k} alpha4^{k}") if k else ()))
    der.mark()
    return der


def alpha_beta_identity() -> Derivation:
    """(alpha^2 beta)^2 = (alpha beta)^3 on the one-holed torus."""
    der = Derivation("one-holed-torus", [_w("alpha alpha beta alpha alpha beta")]).mark()
    der.rule("braid-alpha-beta", 1).mark()
    return der


def corrupt(words: list[Word], index: int, letter: int = 0) -> list[Word]:
    """Negative control: drop one twist from ``words[index]``."""
    out = list(words)
    w = out[index]
    out[index] = w[:letter] + w[letter + 1:]
    return out


def builtin_derivations() -> dict[str, Derivation]:
    out = {}
    for n in (2, 3, 4, 5, 6):
        out[f"phi_n{n}"] = phi_n(n)
    for k in (0, 1, 2, 3):
        out[f"phi_k{k}"] = phi_k(k)
    for p in (2, 3, 4, 5, 6):
        out[f"phi_p{p}"] = phi_p(p)
    for n in (2, 3, 4):
        out[f"square_n{n}"] = square_n(n)
    for k, s in ((0, 0), (1, 0), (1, 1), (2, 1), (3, 2)):
        out[f"reduction_k{k}_s{s}"] = reduction(k, s)
        out[f"square_k{k}_s{s}"] = square_k(k, s)
    out["alpha_beta"] = alpha_beta_identity()
    return out


__all__ = ["Derivation", "phi_n", "phi_k", "phi_p", "square_n", "square_k", "reduction",
           "alpha_beta_identity", "corrupt", "builtin_derivations", "inverse"]
