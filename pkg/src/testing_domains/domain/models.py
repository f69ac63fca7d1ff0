"""Results of testing-domain constructions.

These are immutable records: the witness that the stretch factor is large
relative to the fundamental domain, the canonical testing domain built from
it, and the certificates produced by the covering check.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from lattices.domain import GroupElement, LatticeModel, LatticePointSet


@dataclass(frozen=True)
class SufficiencyWitness:
    """A ball that stays inside the supports after dilation.

    Attributes:
        c_minus: Radius of the ball.
        shift: The support level ``s`` the ball fits into.
        centre: Centre ``z`` of the ball.
        branch: ``"a"`` when the stretch dominates the radii ratio, ``"b"``
            when the ball was found inside ``V(s)``.
    """

    c_minus: Fraction
    shift: int
    centre: GroupElement
    branch: str

    def __post_init__(self):
        if self.c_minus <= 0:
            raise ValueError(f"Sufficiency radius must be positive: {self.c_minus}")
        if self.shift < 0:
            raise ValueError(f"Sufficiency shift must be nonnegative: {self.shift}")

    def holds(self, model: LatticeModel, levels: range = range(1, 4)) -> bool:
        """Check ``Dⁿ(B(z, C_minus)) ⊆ V(s+n) ∩ Γ`` for the given levels."""
        ball = model.ball_points(self.centre, self.c_minus)
        return all(
            model.in_support(self.shift + n, model.dilate(n, p))
            for n in levels
            for p in ball
        )


@dataclass(frozen=True)
class CanonicalDomain:
    """The testing domain ``V(s₁+s₂) ∩ Γ`` and its constant ``C_T = 1/δ``.

    Attributes:
        domain: The testing domain.
        c_t: The testing constant.
        s1: Shift of the sufficiency witness.
        s2: Least extra level with ``V̄·B(e,δ) ⊆ B(e, C_minus·λ₀^{s₂})``.
        delta: The thickening radius.
        source: ``"construction"`` or ``"backend"`` for a shipped override.
    """

    domain: LatticePointSet
    c_t: Fraction
    s1: int
    s2: int
    delta: Fraction
    source: str = "construction"


@dataclass(frozen=True)
class DomainCertificate:
    """Outcome of a successful covering check.

    Attributes:
        reference: The verified testing domain ``T₀``.
        domain: The certified candidate ``T``.
        level: The level ``N₀``.
        witnesses: ``γ_x`` for every transversal point ``x``.
    """

    reference: LatticePointSet
    domain: LatticePointSet
    level: int
    witnesses: dict[GroupElement, GroupElement] = field(
        default_factory=dict, compare=False, repr=False
    )

    def recheck(self, model: LatticeModel) -> bool:
        """Re-verify every containment by exact point-set inclusion."""
        cover = model.support(self.level, self.domain)
        for x, gamma in self.witnesses.items():
            shift = model.inverse(model.dilate(self.level, gamma))
            for t in self.reference:
                image = model.multiply(shift, model.multiply(x, t))
                if image not in cover:
                    return False
        return True


@dataclass(frozen=True)
class ReductionStep:
    """One accepted move of the greedy reduction.

    Attributes:
        move: Description of the removed points.
        certificate: Covering certificate against the previous domain.
    """

    move: str
    certificate: DomainCertificate


@dataclass(frozen=True)
class ReductionResult:
    """The reduced domain and the certificate chain leading to it."""

    initial: LatticePointSet
    domain: LatticePointSet
    steps: tuple[ReductionStep, ...] = ()

    @property
    def ledger(self) -> list[int]:
        return [len(self.initial)] + [len(s.certificate.domain) for s in self.steps]
