"""
Verification reports and their JSON form.

A report lists a verdict per degree. A failing degree carries the first
mismatch: the lowest power of x whose coefficients differ, the two
coefficients, and the name of the step that produced them.
"""
from dataclasses import dataclass

from django.db import models

from coefficients.fields import lift, scalar_from_json, scalar_to_json


class Verdict(models.TextChoices):
    PASS = 'pass', 'Pass'
    FAIL = 'fail', 'Fail'


@dataclass(frozen=True)
class Mismatch:
    x_power: int
    lhs: object
    rhs: object
    step: str = ''

    def to_json(self):
        return {
            'x_power': self.x_power,
            'lhs': scalar_to_json(self.lhs),
            'rhs': scalar_to_json(self.rhs),
            'step': self.step,
        }

    @classmethod
    def from_json(cls, doc):
        return cls(
            x_power=doc['x_power'],
            lhs=scalar_from_json(doc['lhs']),
            rhs=scalar_from_json(doc['rhs']),
            step=doc.get('step', ''),
        )


@dataclass(frozen=True)
class DegreeVerdict:
    n: int
    verdict: Verdict
    first_mismatch: Mismatch = None

    def __post_init__(self):
        object.__setattr__(self, 'verdict', Verdict(self.verdict))
        if (self.verdict == Verdict.FAIL) != (self.first_mismatch is not None):
            raise ValueError('a failing degree needs a mismatch and a passing one must not have it')

    @classmethod
    def from_mismatch(cls, n, mismatch):
        if mismatch is None:
            return cls(n, Verdict.PASS)
        return cls(n, Verdict.FAIL, mismatch)

    @property
    def passed(self):
        return self.verdict == Verdict.PASS

    def to_json(self):
        doc = {'n': self.n, 'verdict': self.verdict.value}
        if self.first_mismatch is not None:
            doc['first_mismatch'] = self.first_mismatch.to_json()
        return doc

    @classmethod
    def from_json(cls, doc):
        mismatch = doc.get('first_mismatch')
        return cls(doc['n'], doc['verdict'], Mismatch.from_json(mismatch) if mismatch else None)


@dataclass(frozen=True)
class VariantResult:
    """One registered reading of a printed formula and how it fared."""

    name: str
    description: str
    per_degree: tuple

    @property
    def matched(self):
        return all(d.passed for d in self.per_degree)

    def to_json(self):
        return {
            'name': self.name,
            'description': self.description,
            'matched': self.matched,
            'per_degree': [d.to_json() for d in self.per_degree],
        }

    @classmethod
    def from_json(cls, doc):
        return cls(doc['name'], doc['description'], tuple(DegreeVerdict.from_json(d) for d in doc['per_degree']))


@dataclass(frozen=True)
class SpotCheck:
    """Numeric re-check of symbolically passing steps at one value of lambda."""

    value: object
    checked: int
    disagreements: tuple = ()

    def to_json(self):
        return {
            'lambda': scalar_to_json(self.value),
            'checked': self.checked,
            'disagreements': [{'n': n, 'step': step} for n, step in self.disagreements],
        }

    @classmethod
    def from_json(cls, doc):
        return cls(
            scalar_from_json(doc['lambda']),
            doc['checked'],
            tuple((d['n'], d['step']) for d in doc['disagreements']),
        )


@dataclass(frozen=True)
class IdentityReport:
    id: str
    params: dict
    per_degree: tuple
    variant_note: str = None
    variants: tuple = ()
    spot_checks: tuple = ()

    @property
    def passed(self):
        return all(d.passed for d in self.per_degree)

    @property
    def failed_degrees(self):
        return [d.n for d in self.per_degree if not d.passed]

    def to_json(self):
        doc = {
            'id': str(self.id),
            'params': dict(self.params),
            'per_degree': [d.to_json() for d in self.per_degree],
        }
        if self.variant_note is not None:
            doc['variant_note'] = self.variant_note
        if self.variants:
            doc['variants'] = [v.to_json() for v in self.variants]
        if self.spot_checks:
            doc['spot_checks'] = [s.to_json() for s in self.spot_checks]
        return doc

    @classmethod
    def from_json(cls, doc):
        return cls(
            id=doc['id'],
            params=dict(doc.get('params', {})),
            per_degree=tuple(DegreeVerdict.from_json(d) for d in doc['per_degree']),
            variant_note=doc.get('variant_note'),
            variants=tuple(VariantResult.from_json(v) for v in doc.get('variants', [])),
            spot_checks=tuple(SpotCheck.from_json(s) for s in doc.get('spot_checks', [])),
        )


def compare_polys(lhs, rhs, step=''):
    """
    Exact comparison of two polynomials in x.

    Returns:
        Mismatch at the lowest differing power of x, or None when equal
    """
    lhs, rhs = lift(lhs, rhs)
    for j in range(max(len(lhs.coeffs), len(rhs.coeffs))):
        a, b = lhs.coeff(j), rhs.coeff(j)
        if a != b:
            return Mismatch(j, a, b, step)
    return None
