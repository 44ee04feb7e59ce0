"""The standard G2-structure on a Lie algebra and its intrinsic torsion."""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exterior import Form, contract, e, hodge, norm2, wedge
from .nilalg import ce_differential


class TorsionError(ArithmeticError):
    pass


class NoCharacteristicConnection(ValueError):
    pass


def standard_phi():
    return (e("127") + e("347") + e("567") + e("135")
            - e("245") - e("146") - e("236"))


def standard_psi():
    return (e("1234") + e("1256") + e("3456") + e("1367")
            + e("1457") + e("2357") - e("2467"))


PHI = standard_phi()
PSI = standard_psi()
VOL = Form.volume(7)


@dataclass(frozen=True)
class TorsionForms:
    tau0: Fraction
    tau1: Form
    tau2: Form
    tau3: Form
    lam: Fraction
    dphi: Form
    dpsi: Form
    flags: tuple

    @property
    def ok(self):
        return all(v for _, v in self.flags)


def _star_scalar(top):
    return top.scalar_value()


@lru_cache(maxsize=4096)
def torsion(alg):
    """Split d(phi) and d(psi) into the torsion forms of the standard phi."""
    dphi = ce_differential(alg, PHI)
    dpsi = ce_differential(alg, PSI)
    tau0 = _star_scalar(wedge(PHI, dphi)) / 7
    tau1 = hodge(wedge(PHI, hodge(dphi))) / 12
    tau2 = hodge(wedge(tau1, PSI) * 4 - dpsi)
    tau3 = hodge(dphi - PSI * tau0 - wedge(tau1, PHI) * 3)
    flags = (
        ("dphi", dphi == PSI * tau0 + wedge(tau1, PHI) * 3 + hodge(tau3)),
        ("dpsi", dpsi == wedge(tau1, PSI) * 4 - hodge(tau2)),
        ("tau3^phi", not wedge(tau3, PHI)),
        ("tau3^psi", not wedge(tau3, PSI)),
        ("tau2^phi", wedge(tau2, PHI) == -hodge(tau2)),
    )
    t = TorsionForms(tau0, tau1, tau2, tau3, Fraction(7, 12) * tau0, dphi, dpsi, flags)
    if not t.ok:
        bad = [name for name, v in flags if not v]
        raise TorsionError(f"torsion decomposition failed ({', '.join(bad)}) for {alg}")
    return t


@dataclass(frozen=True)
class Classification:
    torsion_free: bool
    coclosed: bool
    g2t: bool


def classify(alg, t=None):
    t = t or torsion(alg)
    torsion_free = not (t.tau0 or t.tau1 or t.tau2 or t.tau3)
    return Classification(torsion_free, not t.dpsi, not t.tau2)


def torsion_H(alg, t=None):
    """Torsion of the characteristic connection, 1/6 tau0 phi - tau1 _| psi - tau3."""
    t = t or torsion(alg)
    if t.tau2:
        raise NoCharacteristicConnection("tau2 != 0: no characteristic connection")
    return PHI * (t.tau0 / 6) - contract(t.tau1, PSI) - t.tau3


def torsion_H_coclosed(alg, t=None):
    """The shortcut 7/6 tau0 phi - *d(phi), valid when tau1 = 0."""
    t = t or torsion(alg)
    return PHI * (Fraction(7, 6) * t.tau0) - hodge(t.dphi)


def codifferential_tau1(alg, t=None):
    """delta(tau1) = -*d*tau1 as a number."""
    t = t or torsion(alg)
    return -hodge(ce_differential(alg, hodge(t.tau1))).scalar_value()


def tau1_norm2(t):
    return norm2(t.tau1)
