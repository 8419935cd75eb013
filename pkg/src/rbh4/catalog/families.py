"""Transcribed operator families.

Images are written in the expression language of :mod:`rbh4.expr` against
the basis identifiers of each algebra (``one`` stands for the unit 1).
Derived vectors such as ``h = alpha*one + g`` and named images such as
``Rf`` live in ``let``. Families are transcribed as printed; variants with a
suffix (``.fixed``, ``.general``, ...) carry the alternative reading.
"""

from __future__ import annotations

from .model import AnyNonZero, NonZero, Zero, build_family

SRC_ASSOC = "associative RB operators on H4"
SRC_LM2 = "Lie algebra [h,e]=2e, [h,f]=-2f"
SRC_LM3 = "Lie algebra [h,y]=2y"
SRC_KER3 = "H4(-), kernel of dimension 3"
SRC_AB1 = "H4(-), abelian 2-dim kernel with a g-component"
SRC_AB0 = "H4(-), abelian 2-dim kernel inside I"
SRC_NONAB = "H4(-), nonabelian 2-dim kernel"
SRC_TH0 = "H4(-), kernel of dimension 1, image I"
SRC_TH1 = "H4(-), kernel of dimension 1, image span(alpha 1 + g, e, f)"
SRC_TH2 = "H4(-), kernel of dimension 1, image span(1, g + gamma f, e)"
SRC_NONDEG = "H4(-), nondegenerate"

# (id, algebra, images, let, constraints, source, note)
_RAW: list = []


# Families found by the exhaustive F_3 scan that no printed form covers. They
# verify over Q but are kept apart from the transcription.
_SUPP: list = []

SRC_SUPP = "H4(-), supplementary (exhaustive scan residue)"


def _add(id, algebra, images, *, let=(), where=(), source, note="", into=None):
    (_RAW if into is None else into).append(
        (id, algebra, images, tuple(let), tuple(where), source, note)
    )


# ---------------------------------------------------------------- associative

_add("assoc.a", "h4", {"one": "0", "g": "0", "x": "-lam*x", "gx": "-lam*gx"}, source=SRC_ASSOC)
_add("assoc.b", "h4", {"one": "-lam*one", "g": "-lam*g", "x": "0", "gx": "0"}, source=SRC_ASSOC)
_add("assoc.c", "h4", {"one": "-lam*one", "g": "-lam*g", "x": "-lam*x", "gx": "-lam*gx"},
     source=SRC_ASSOC)
_add(
    "assoc.d", "h4",
    {
        "one": "0",
        "g": "-p1*one + p1*g - (lam + p1)*(lam + p1 + p2)/p3*x + (lam + p1)*(lam + p2)/p3*gx",
        "x": "-p3*one + p3*g - (2*lam + p1 + p3)*x + (lam + p2)*gx",
        "gx": "-p3*one + p3*g - (lam + p1 + p2)*x + p2*gx",
    },
    where=[NonZero("p3")], source=SRC_ASSOC,
    note="R(x) printed with (2 lam + p1 + p3)",
)
_add(
    "assoc.d.fixed", "h4",
    {
        "one": "0",
        "g": "-p1*one + p1*g - (lam + p1)*(lam + p1 + p2)/p3*x + (lam + p1)*(lam + p2)/p3*gx",
        "x": "-p3*one + p3*g - (2*lam + p1 + p2)*x + (lam + p2)*gx",
        "gx": "-p3*one + p3*g - (lam + p1 + p2)*x + p2*gx",
    },
    where=[NonZero("p3")], source=SRC_ASSOC,
    note="R(x) with (2 lam + p1 + p2), matching the companion family e",
)
_add(
    "assoc.e", "h4",
    {
        "one": "-lam*one",
        "g": "(lam + p1)*one + p1*g - (lam + p1)*(lam + p1 + p2)/p3*x + (lam + p1)*(lam + p2)/p3*gx",
        "x": "p3*one + p3*g - (2*lam + p1 + p2)*x + (lam + p2)*gx",
        "gx": "p3*one + p3*g - (lam + p1 + p2)*x + p2*gx",
    },
    where=[NonZero("p3")], source=SRC_ASSOC,
)
_add(
    "assoc.f", "h4",
    {
        "one": "-lam*one",
        "g": "lam*one + p1*x + p1*p2/(lam + p2)*gx",
        "x": "-(lam + p2)*x - p2*gx",
        "gx": "(lam + p2)*x + p2*gx",
    },
    where=[NonZero("lam + p2")], source=SRC_ASSOC,
)
_add(
    "assoc.g", "h4",
    {
        "one": "-lam*one",
        "g": "lam*one + lam*(lam + p1)/p2*x + lam*(lam + p1)/p2*gx",
        "x": "-p2*one - p2*g - (2*lam + p1)*x - (lam + p1)*gx",
        "gx": "p2*one + p2*g + (lam + p1)*x + p1*gx",
    },
    where=[NonZero("p2")], source=SRC_ASSOC,
)
_add(
    "assoc.h", "h4",
    {
        "one": "lam/2*one - lam/2*g + p1*x + p2*gx",
        "g": "lam/2*one - lam/2*g - p2*x + p1*gx",
        "x": "-lam/2*x - lam/2*gx",
        "gx": "-lam/2*x - lam/2*gx",
    },
    source=SRC_ASSOC,
)
_add(
    "assoc.h.fixed", "h4",
    {
        "one": "lam/2*one - lam/2*g + p1*x + p2*gx",
        "g": "lam/2*one - lam/2*g - p2*x - p1*gx",
        "x": "-lam/2*x - lam/2*gx",
        "gx": "-lam/2*x - lam/2*gx",
    },
    source=SRC_ASSOC, note="sign of the gx-coefficient of R(g) flipped",
)

# ---------------------------------------------------------------- lm2

_RE2 = ("Re", "alpha2*h + beta2*e + gamma2*f")
_add("lm2.1.1", "lm2", {"h": "(beta2 + lam)/alpha2*Re", "e": "Re", "f": "0"},
     let=[_RE2], where=[NonZero("alpha2")], source=SRC_LM2, note="sign as in the statement")
_add("lm2.1.1.fixed", "lm2", {"h": "-(beta2 + lam)/alpha2*Re", "e": "Re", "f": "0"},
     let=[_RE2], where=[NonZero("alpha2")], source=SRC_LM2, note="sign as derived in the proof")
_add("lm2.1.2", "lm2", {"h": "-((beta2 + lam)*Re + gamma2*Rf)/alpha2", "e": "Re", "f": "Rf"},
     let=[_RE2, ("Rf", "-lam*f")], where=[NonZero("alpha2")], source=SRC_LM2)
_H1 = "alpha1*h + beta1*e + gamma1*f"
_HHALF = "-lam/2*h + beta1*e + gamma1*f"
_add("lm2.1.3", "lm2", {"h": _H1, "e": "0", "f": "0"}, source=SRC_LM2)
_add("lm2.1.4", "lm2", {"h": _HHALF, "e": "0", "f": "beta3*e"},
     where=[NonZero("beta3")], source=SRC_LM2)
_add("lm2.1.5", "lm2", {"h": _H1, "e": "0", "f": "-lam*f"}, source=SRC_LM2)
_add("lm2.1.6", "lm2", {"h": "beta1*e + gamma1*f", "e": "0", "f": "beta3*e - lam*f"},
     where=[NonZero("beta3")], source=SRC_LM2)
_add("lm2.1.7", "lm2", {"h": "-lam*h + beta1*e + gamma1*f", "e": "-lam*e", "f": "beta3*e"},
     where=[NonZero("beta3")], source=SRC_LM2, note="guard printed with a stray comma")
_add("lm2.1.8", "lm2", {"h": _H1, "e": "-lam*e", "f": "-lam*f"}, source=SRC_LM2)
_add("lm2.1.9", "lm2", {"h": _HHALF, "e": "-lam*e", "f": "beta3*e - lam*f"},
     where=[NonZero("beta3")], source=SRC_LM2)
_add("lm2.1.10", "lm2",
     {"h": _HHALF, "e": "beta2*e + gamma2*f", "f": "beta2*(beta2 + lam)/gamma2*e + beta2*f"},
     where=[NonZero("beta2"), NonZero("beta2 + lam"), NonZero("gamma2")], source=SRC_LM2)

# ---------------------------------------------------------------- lm3

_add("lm3.2.1", "lm3",
     {"h": "alpha1*h + beta1*y + gamma1*z", "y": "0",
      "z": "alpha3*h + beta1*alpha3/alpha1*y + gamma3*z"},
     where=[NonZero("alpha1"), NonZero("alpha1 + lam")], source=SRC_LM3)
_add("lm3.2.2", "lm3", {"h": "beta1*y + gamma1*z", "y": "0", "z": "beta3*y + gamma3*z"},
     source=SRC_LM3)
_add("lm3.2.3", "lm3", {"h": "gamma1*z", "y": "0", "z": "alpha3*h + beta3*y + gamma3*z"},
     source=SRC_LM3)
_add("lm3.2.4", "lm3", {"h": "alpha1*h + beta1*y + gamma1*z", "y": "-lam*y", "z": "gamma3*z"},
     where=[NonZero("alpha1")], source=SRC_LM3)
_add("lm3.2.5", "lm3",
     {"h": "-lam*h + beta1*y + gamma1*z", "y": "-lam*y", "z": "beta3*y + gamma3*z"},
     source=SRC_LM3)
_add("lm3.2.6", "lm3",
     {"h": "alpha1*h + beta3*(alpha1 + lam)/alpha3*y + gamma1*z", "y": "-lam*y",
      "z": "alpha3*h + beta3*y + gamma3*z"},
     where=[NonZero("alpha1"), NonZero("alpha3")], source=SRC_LM3)
_LM3_27 = {"h": "beta1*y + gamma1*z", "y": "-lam*y + gamma2*z",
           "z": "alpha3*h + alpha3*beta1/lam*y + gamma3*z"}
_add("lm3.2.7", "lm3", _LM3_27, source=SRC_LM3)
_add("lm3.2.7.fixed", "lm3", _LM3_27, where=[Zero("gamma2")], source=SRC_LM3,
     note="adds the derived condition alpha3 gamma2 = 0 via gamma2 = 0")
_add("lm3.2.7.fixed.alpha3", "lm3", _LM3_27, where=[Zero("alpha3")], source=SRC_LM3,
     note="adds the derived condition alpha3 gamma2 = 0 via alpha3 = 0")
_LM3_28 = {"h": "-lam*h + beta1*y + gamma1*z", "y": "gamma2*z",
           "z": "alpha3*h - alpha3*beta1/lam*y + gamma3*z"}
_add("lm3.2.8", "lm3", _LM3_28, source=SRC_LM3)
_add("lm3.2.8.fixed", "lm3", _LM3_28, where=[Zero("gamma2")], source=SRC_LM3,
     note="adds the derived condition alpha3 gamma2 = 0 via gamma2 = 0")
_add("lm3.2.8.fixed.alpha3", "lm3", _LM3_28, where=[Zero("alpha3")], source=SRC_LM3,
     note="adds the derived condition alpha3 gamma2 = 0 via alpha3 = 0")
_add("lm3.2.9", "lm3",
     {"h": "alpha1*h - alpha1*(alpha1 + lam)/alpha2*y + gamma1*z",
      "y": "alpha2*h - (alpha1 + lam)*y + gamma2*z", "z": "gamma3*z"},
     where=[NonZero("alpha2")], source=SRC_LM3)

# ---------------------------------------------------------------- kernel dim 3

_add("ker3.i", "h4minus", {"one": "R1", "g": "-alpha*R1", "e": "0", "f": "0"},
     let=[("R1", "alpha1*one + alpha2*g + alpha3*e + alpha4*f")],
     where=[AnyNonZero("alpha1", "alpha2", "alpha3", "alpha4")], source=SRC_KER3,
     note="kernel basis alpha 1 + g, e, f")
_add("ker3.ii", "h4minus", {"one": "0", "g": "-gamma*Rf", "e": "0", "f": "Rf"},
     let=[("Rf", "alpha1*one + alpha2*g + alpha3*e + (gamma*alpha2 - lam)*f")],
     where=[AnyNonZero("alpha1", "alpha2", "alpha3", "gamma*alpha2 - lam")], source=SRC_KER3,
     note="kernel basis 1, g + gamma f, e")

# ---------------------------------------------------------------- kernel dim 2, abelian, g-component

_NU_ETA = "guard printed with nu; read as eta"
_add("ker2.ab1.i", "h4minus",
     {"one": "0", "g": "0", "e": "alpha*one - lam*e", "f": "alpha1*one - lam*f"}, source=SRC_AB1)
_add("ker2.ab1.ii", "h4minus",
     {"one": "0", "g": "0", "e": "alpha*one + sigma*g - lam*e", "f": "-lam*f"}, source=SRC_AB1)
_add("ker2.ab1.iii", "h4minus",
     {"one": "0", "e": "-lam*e + alpha*one", "f": "-lam*f + alpha1*one",
      "g": "xi*lam*e + eta*lam*f - (xi*alpha + eta*alpha1)*one"},
     where=[AnyNonZero("xi", "eta")], source=SRC_AB1, note=_NU_ETA)
_add("ker2.ab1.iv", "h4minus",
     {"one": "0", "e": "Re", "f": "Rf", "g": "-xi*Re - eta*Rf"},
     let=[("Re", "-lam*e"), ("Rf", "-lam*f + alpha2*one + beta2*(g + xi*e + eta*f)")],
     where=[NonZero("beta2"), AnyNonZero("xi", "eta")], source=SRC_AB1, note=_NU_ETA)

# ---------------------------------------------------------------- kernel dim 2, abelian, inside I

_W1 = ("w", "w1*one + w2*e + w3*f")  # w in I
_WK = ("w", "w2*e + w3*f")  # w in ker R = span(e, f)
_add("ker2.ab0.i", "h4minus",
     {"one": "-gamma*one", "g": "-lam*g + w", "e": "-eta*one", "f": "one"},
     let=[_W1], where=[NonZero("eta")], source=SRC_AB0)
_add("ker2.ab0.ii", "h4minus",
     {"f": "lam*e", "g": "-lam*g + w", "e": "-lam*e", "one": "-lam*e"},
     let=[_W1], source=SRC_AB0, note="normalized form as printed")
_add("ker2.ab0.ii.general", "h4minus",
     {"f": "lam/eta*e", "g": "-lam*g + w", "e": "-lam*e", "one": "-gamma*lam/eta*e"},
     let=[_W1], where=[NonZero("eta")], source=SRC_AB0,
     note="form before normalization, as derived")
_add("ker2.ab0.iii", "h4minus",
     {"f": "-lam*f", "g": "-lam*g + w", "e": "lam*f", "one": "gamma*lam*f"},
     let=[_W1], source=SRC_AB0, note="normalized form as printed")
_add("ker2.ab0.iii.general", "h4minus",
     {"f": "-lam*f", "g": "-lam*g + w", "e": "eta*lam*f", "one": "gamma*lam*f"},
     let=[_W1], where=[NonZero("eta")], source=SRC_AB0,
     note="R(e) = -eta R(f) kept general")
_GAMMA0 = "kernel condition forces gamma = 0, i.e. 1 in the kernel"
_AB0IV = ({"one": "-gamma*Rf", "g": "zeta*Rf + mu*one", "e": "0", "f": "Rf"},
          [("Rf", "-lam*f + xi*one + nu*e")])
_add("ker2.ab0.iv", "h4minus", _AB0IV[0], let=_AB0IV[1], where=[NonZero("mu")], source=SRC_AB0)
_add("ker2.ab0.iv.fixed", "h4minus", _AB0IV[0], let=_AB0IV[1],
     where=[NonZero("mu"), Zero("gamma")], source=SRC_AB0, note=_GAMMA0)
_AB0V = ({"one": "-gamma*Rf", "g": "sigma1*Rf + mu*one", "e": "0", "f": "Rf"},
         [("Rf", "g + beta1*e - (lam + sigma1)*f + xi*one")])
_add("ker2.ab0.v", "h4minus", _AB0V[0], let=_AB0V[1], where=[NonZero("mu")],
     source=SRC_AB0, note="normalized form as printed")
_add("ker2.ab0.v.fixed", "h4minus", _AB0V[0], let=_AB0V[1],
     where=[NonZero("mu"), Zero("gamma")], source=SRC_AB0, note=_GAMMA0)
_AB0VG = ({"one": "-gamma*Rf", "g": "sigma1/sigma*Rf + mu*one", "e": "0", "f": "Rf"},
          [("Rf", "sigma*g + sigma*beta1*e - (lam + sigma1)*f + xi*one")])
_add("ker2.ab0.v.general", "h4minus", _AB0VG[0], let=_AB0VG[1],
     where=[NonZero("sigma"), NonZero("mu")], source=SRC_AB0,
     note="form before normalization, as derived")
_add("ker2.ab0.v.general.fixed", "h4minus", _AB0VG[0], let=_AB0VG[1],
     where=[NonZero("sigma"), NonZero("mu"), Zero("gamma")], source=SRC_AB0, note=_GAMMA0)
_AB0VI = {"one": "-gamma*one", "g": "sigma1*g + sigma1*(beta1*e + gamma1*f) + xi*one", "e": "0",
          "f": "one"}
_add("ker2.ab0.vi", "h4minus", _AB0VI, source=SRC_AB0)
_add("ker2.ab0.vi.fixed", "h4minus", _AB0VI, where=[Zero("sigma1 + lam")], source=SRC_AB0,
     note="the pair (g, f) forces sigma1 = -lam")
_RF7 = ("Rf", "-lam*f + alpha1*one + beta1*e")
_add("ker2.ab0.vii", "h4minus",
     {"one": "0", "g": "xi*lam*f + alpha2*one + beta2*e", "e": "0", "f": "Rf"},
     let=[_RF7], where=[NonZero("beta2 - xi*beta1")], source=SRC_AB0,
     note="sign of the f-coefficient of R(g) as in the statement")
_add("ker2.ab0.vii.zero", "h4minus",
     {"one": "0", "g": "xi*lam*f + alpha2*one + beta2*e", "e": "0", "f": "Rf"},
     let=[_RF7], where=[Zero("xi*alpha1 - alpha2")], source=SRC_AB0,
     note="second branch of the derived guard: xi alpha1 = alpha2")
_add("ker2.ab0.vii.proof", "h4minus",
     {"one": "0", "g": "-xi*lam*f + alpha2*one + beta2*e", "e": "0", "f": "Rf"},
     let=[_RF7], where=[NonZero("beta2 - xi*beta1")], source=SRC_AB0,
     note="sign of the f-coefficient of R(g) as derived")
_add("ker2.ab0.viii", "h4minus",
     {"one": "lam*gamma*f", "g": "-lam*g + w", "e": "0", "f": "-lam*f"},
     let=[_W1], source=SRC_AB0)
_add("ker2.ab0.ix", "h4minus",
     {"one": "0", "g": "sigma1*g + w", "e": "0", "f": "-lam*f"}, let=[_W1], source=SRC_AB0)
_add("ker2.ab0.x", "h4minus",
     {"one": "0", "g": "-lam/2*g + w", "e": "0", "f": "-e/lam"}, let=[_W1], source=SRC_AB0)
_add("ker2.ab0.xi", "h4minus",
     {"one": "R1", "g": "xi*R1 + mu*one", "e": "0", "f": "0"},
     let=[_WK, ("R1", "sigma*g + alpha*one + w")], where=[NonZero("sigma"), NonZero("mu")],
     source=SRC_AB0)
_add("ker2.ab0.xii", "h4minus",
     {"one": "xi*Rg + mu*one", "g": "Rg", "e": "0", "f": "0"},
     let=[_WK, ("Rg", "sigma*g + alpha*one + w")], where=[NonZero("sigma"), NonZero("mu")],
     source=SRC_AB0)
_add("ker2.ab0.xiii", "h4minus",
     {"one": "alpha1*one + beta1*e + gamma2*f", "g": "alpha2*one + beta2*e + gamma2*f",
      "e": "0", "f": "0"},
     source=SRC_AB0, note="R(1) printed with gamma2")
_add("ker2.ab0.xiii.general", "h4minus",
     {"one": "alpha1*one + beta1*e + gamma1*f", "g": "alpha2*one + beta2*e + gamma2*f",
      "e": "0", "f": "0"},
     source=SRC_AB0, note="independent f-coefficient gamma1 in R(1)")

# ---------------------------------------------------------------- kernel dim 2, nonabelian

_RFN = ("Rf", "sigma1*one + g + (gamma - lam)*f + sigma4*e")
_RGN = "-delta*R1 - gamma*Rf"
_add("ker2.nonab.i", "h4minus", {"one": "R1", "g": _RGN, "e": "0", "f": "Rf"},
     let=[_RFN, ("R1", "delta1*one")], where=[NonZero("delta1")], source=SRC_NONAB)
_add("ker2.nonab.ii", "h4minus", {"one": "R1", "g": _RGN, "e": "0", "f": "Rf"},
     let=[_RFN, ("R1", "delta4*e")], where=[NonZero("delta4")], source=SRC_NONAB)
_add("ker2.nonab.iii", "h4minus", {"one": "R1", "g": _RGN, "e": "0", "f": "Rf"},
     let=[_RFN, ("R1", "xi*(Rf + lam*f)")], where=[NonZero("xi")], source=SRC_NONAB)
_add("ker2.nonab.iv", "h4minus", {"one": "R1", "g": _RGN, "e": "0", "f": "Rf"},
     let=[("Rf", "-lam*f"), ("R1", "delta1*one + delta3*g + gamma*delta3*f + delta4*e")],
     where=[NonZero("delta3")], source=SRC_NONAB)
_add("ker2.nonab.v", "h4minus", {"one": "R1", "g": _RGN, "e": "0", "f": "Rf"},
     let=[("Rf", "sigma1*one - lam*f + sigma4*e"), ("R1", "delta1*one + delta4*e")],
     where=[AnyNonZero("delta1", "delta4")], source=SRC_NONAB)

# ---------------------------------------------------------------- kernel dim 1, image I

_add("th0.i", "h4minus",
     {"one": "R1", "e": "Re", "f": "Rf", "g": "beta*R1 + delta*Re + gamma*Rf"},
     let=[("R1", "alpha*one"), ("Re", "alpha1*one - lam*e"), ("Rf", "alpha2*one - lam*f")],
     where=[NonZero("alpha")], source=SRC_TH0)
_add("th0.ii", "h4minus",
     {"one": "alpha*one + beta*e", "e": "0", "f": "alpha2*one + beta2*e - lam*f",
      "g": "sigma*one + delta*e + nu*f"},
     where=[NonZero("beta*(nu*alpha2 + sigma*lam) - alpha*(delta*lam + nu*beta2)")],
     source=SRC_TH0)
_add("th0.iii", "h4minus",
     {"one": "0", "e": "alpha*one - lam*e", "f": "alpha1*one - lam*f",
      "g": "sigma*one + mu*e + nu*f"},
     where=[NonZero("lam*sigma + alpha*mu + alpha1*nu")], source=SRC_TH0)

# ---------------------------------------------------------------- kernel dim 1, image J_alpha

_HA = ("h", "alpha*one + g")
_TH1 = {"one": "R1", "g": "Rh - alpha*R1", "e": "Re", "f": "Rf"}


def _th1(id, r1, rh, re, rf, where=(), note=""):
    _add(id, "h4minus", _TH1, let=[_HA, ("R1", r1), ("Rh", rh), ("Re", re), ("Rf", rf)],
         where=where, source=SRC_TH1, note=note)


_th1("th1.i", "xi*h + mu*e + nu*f", "nu*beta3/xi*e + nu*lam/xi*f", "0", "beta3*e - lam*f",
     [NonZero("xi"), NonZero("nu"), NonZero("beta3")])
_th1("th1.ii", "mu*e + nu*f", "-lam*h + beta1*e + gamma1*f", "-lam*e", "-lam*e", [NonZero("nu")])
_th1("th1.iii", "0", "alpha1*h + beta1*e + gamma1*f", "-lam*e", "-lam*f",
     [NonZero("alpha1"), NonZero("alpha1 + lam")])
_th1("th1.iv", "mu*e + nu*f", "-lam*h + beta1*e + gamma1*f", "-lam*e", "-lam*f")
_th1("th1.v", "xi*h + mu*e + nu*f", "alpha1*h + (alpha1 + lam)*mu/xi*e + (alpha1 + lam)*nu/xi*f",
     "-lam*e", "-lam*f", [NonZero("xi")])
_th1("th1.vi", "0", "-lam/2*h + beta1*e + gamma1*f", "-lam*e", "beta3*e - lam*f",
     [NonZero("beta3")])
_th1("th1.vii", "xi*h + mu*e + nu*f", "-lam/2*h + (lam/2*mu + beta3*nu)/xi*e + lam/2*nu/xi*f",
     "-lam*e", "beta3*e - lam*f", [NonZero("xi"), NonZero("beta3")])
_th1("th1.viii", "0", "-lam/2*h + beta1*e + gamma1*f", "beta2*e + f",
     "beta2*(beta2 + lam)*e + beta2*f", [NonZero("beta2"), NonZero("beta2 + lam")],
     note="normalized gamma2 = 1 as printed")
_th1("th1.viii.general", "0", "-lam/2*h + beta1*e + gamma1*f", "beta2*e + gamma2*f",
     "beta2*(beta2 + lam)/gamma2*e + beta2*f",
     [NonZero("beta2"), NonZero("beta2 + lam"), NonZero("gamma2")],
     note="gamma2 kept free, as derived")

# ---------------------------------------------------------------- kernel dim 1, image span(1, g + gamma f, e)

_HG = ("h", "g + gamma*f")
_TH2 = {"one": "R1", "g": "Rh - gamma*Rf", "e": "Re", "f": "Rf"}


def _th2(id, r1, rh, re, rf, where=(), note=""):
    _add(id, "h4minus", _TH2, let=[_HG, ("R1", r1), ("Rh", rh), ("Re", re), ("Rf", rf)],
         where=where, source=SRC_TH2, note=note)


_th2("th2.i", "gamma3*one + beta3*e", "gamma1*one - lam/2*h + beta1*e", "0", "mu*e",
     [NonZero("mu"), NonZero("gamma3")])
_th2("th2.i.fixed", "gamma3*one + beta3*e", "gamma1*one - lam/2*h + beta1*e", "0", "mu*e",
     [NonZero("mu"), NonZero("gamma3"), Zero("beta3")],
     note="the pair (1, g) forces beta3 = 0")
_th2("th2.ii", "gamma3*one", "gamma1*one + alpha1*h + beta1*e", "-lam*e", "0",
     [NonZero("alpha1"), NonZero("alpha1 + lam"), NonZero("gamma3")])
_th2("th2.iii", "gamma3*one", "gamma1*one - lam*h + beta1*e", "-lam*e", "nu*one + mu*e",
     [AnyNonZero("gamma3", "nu")])
_th2("th2.iv", "gamma3*one", "gamma1*one - lam*h", "-lam*e", "nu*one + xi*h + mu*e",
     [AnyNonZero("gamma3", "nu", "xi")])
_th2("th2.v", "gamma3*one + beta3*e", "gamma1*one - lam*h + beta1*e", "-lam*e", "nu*one + mu*f",
     [NonZero("beta3"), AnyNonZero("gamma3", "nu")], note="R(f) printed with mu f")
_th2("th2.v.fixed", "gamma3*one + beta3*e", "gamma1*one - lam*h + beta1*e", "-lam*e",
     "nu*one + mu*e", [NonZero("beta3"), AnyNonZero("gamma3", "nu")], note="mu f read as mu e")
_TH2VI = ("gamma3*one + alpha3*h + beta3*e", "gamma1*one + alpha1*h + beta3*(alpha1 + lam)/alpha3*e",
          "-lam*e", "0")
_th2("th2.vi", *_TH2VI,
     [NonZero("alpha1"), NonZero("alpha3"), NonZero("gamma3*alpha1 - gamma1*alpha3")])
_th2("th2.vi.gamma3", *_TH2VI, [NonZero("alpha1"), NonZero("alpha3"), NonZero("gamma3")],
     note="guard read as gamma3 != 0")
_th2("th2.vii", "gamma3*one + alpha3*h + alpha3/lam*e", "gamma1*one + beta1*e", "gamma2*one - lam*e",
     "0", [NonZero("alpha3*(beta1*gamma2 + lam*gamma1)")], note="R(1) printed with alpha3/lam e")
_th2("th2.vii.fixed", "gamma3*one + alpha3*h + alpha3*beta1/lam*e", "gamma1*one + beta1*e",
     "gamma2*one - lam*e", "0",
     [NonZero("alpha3*(beta1*gamma2 + lam*gamma1)"), Zero("gamma2")],
     note="two corrections: e-coefficient alpha3 beta1/lam as derived, and gamma2 = 0 "
     "(the underlying 3-dim case needs alpha3 gamma2 = 0)")
_th2("th2.viii", "gamma3*one", "gamma1*one - lam*h - lam*mu/xi*e", "0", "nu*one + xi*h + mu*e",
     [NonZero("gamma3"), NonZero("xi"), NonZero("gamma1*xi + lam*nu")])
_th2("th2.ix", "gamma3*one", "gamma1*one - lam*h", "gamma2*one", "nu*one + xi*h",
     [NonZero("gamma2"), NonZero("xi")])

# ---------------------------------------------------------------- nondegenerate

_add("nondeg.0", "h4minus", _TH1,
     let=[_HA, ("R1", "xi*h + mu*e + nu*f"),
          ("Rh", "alpha1*one + beta1*h + (lam + beta1)*mu/xi*e + (lam + beta1)*nu/xi*f"),
          ("Re", "-lam*e"), ("Rf", "-lam*f")],
     where=[NonZero("xi"), NonZero("alpha1")], source=SRC_NONDEG, note="R(I) != I")
_add("nondeg.i", "h4minus",
     {"one": "xi*one + mu*e + nu*f", "g": "-lam*h + beta1*e + gamma1*f", "e": "-lam*e",
      "f": "lam*f"},
     let=[_HA], where=[NonZero("xi")], source=SRC_NONDEG, note="R(f) printed as lam f")
_add("nondeg.i.fixed", "h4minus",
     {"one": "xi*one + mu*e + nu*f", "g": "-lam*h + beta1*e + gamma1*f", "e": "-lam*e",
      "f": "-lam*f"},
     let=[_HA], where=[NonZero("xi")], source=SRC_NONDEG, note="R(f) = -lam f as derived")
_add("nondeg.ii", "h4minus",
     {"one": "xi*one", "g": "alpha1*h + beta1*e + gamma1*f", "e": "-lam*e", "f": "-lam*f"},
     let=[_HA], where=[NonZero("alpha1"), NonZero("alpha1 + lam"), NonZero("xi")],
     source=SRC_NONDEG)
_add("nondeg.iii", "h4minus",
     {"one": "xi*one", "g": "-lam/2*h + beta1*e + gamma1*f", "e": "-lam*e", "f": "beta3*e - lam*f"},
     let=[_HA], where=[NonZero("beta3"), NonZero("xi")], source=SRC_NONDEG)
_add("nondeg.iv", "h4minus",
     {"one": "xi*one", "g": "-lam/2*h + beta1*e + gamma1*f", "e": "beta2*e + f",
      "f": "beta2*(beta2 + lam)*e + beta2*f"},
     let=[_HA], where=[NonZero("xi"), NonZero("beta2"), NonZero("beta2 + lam")],
     source=SRC_NONDEG, note="normalized gamma2 = 1 as printed")
_add("nondeg.iv.general", "h4minus",
     {"one": "xi*one", "g": "-lam/2*h + beta1*e + gamma1*f", "e": "beta2*e + gamma2*f",
      "f": "beta2*(beta2 + lam)/gamma2*e + beta2*f"},
     let=[_HA], where=[NonZero("xi"), NonZero("beta2"), NonZero("beta2 + lam"), NonZero("gamma2")],
     source=SRC_NONDEG, note="gamma2 kept free, as derived")


# ---------------------------------------------------------------- supplementary

_add("supp.ker_I", "h4minus",
     {"one": "0", "g": "w1*one + w2*g + w3*e + w4*f", "e": "0", "f": "0"},
     where=[AnyNonZero("w1", "w2", "w3", "w4")], source=SRC_SUPP, into=_SUPP,
     note="kernel exactly I; absent from the dimension-3 forms")
_add("supp.I_to_center", "h4minus",
     {"one": "a1*one", "g": "-lam*g + w1*one + w3*e + w4*f", "e": "a3*one", "f": "a4*one"},
     source=SRC_SUPP, into=_SUPP, note="R maps I into the center and R(g) = -lam g mod I")
_add("supp.half_g", "h4minus",
     {"one": "0", "g": "-lam/2*g + w1*one + w3*e + w4*f", "e": "beta*f", "f": "0"},
     where=[NonZero("beta")], source=SRC_SUPP, into=_SUPP,
     note="kernel K_f; the phi-image covers kernel K_e")
_add("supp.ker_g_gamma_f", "h4minus",
     {"one": "a*one", "g": "-gamma*Rf", "e": "0", "f": "Rf"},
     let=[("Rf", "s*one + u*g + t*e + (gamma*u - lam)*f")],
     where=[NonZero("a")], source=SRC_SUPP, into=_SUPP,
     note="kernel span(g + gamma f, e) with R(1) != 0; the phi-image covers the mirror case")


def raw_definitions() -> list:
    return list(_RAW)


def _build(raw) -> list:
    return [
        build_family(id, alg, images, let=let, constraints=where, source=src, note=note)
        for id, alg, images, let, where, src, note in raw
    ]


def build_all() -> list:
    return _build(_RAW)


def build_supplementary() -> list:
    return _build(_SUPP)
