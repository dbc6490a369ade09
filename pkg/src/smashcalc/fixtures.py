"""Shared small algebras used by tests and shipped scenarios.

Everything here is derived: structure tables come out of presentations via
multiplicative or anti-multiplicative extension and pass the constructor
gates.  No table entry is typed by hand.
"""

from __future__ import annotations

from .action import ModuleAlgebraAction
from .hopf import PresentedBialgebra, fd_hopf_from_presentation
from .ncalg import Presentation
from .scalars import ONE, Q, Scalar, qpow


def c2_presentation(cap=6):
    return Presentation([("g", 0)], relations=[{(0, 0): ONE, (): -ONE}],
                        degree_cap=cap, label="kC2")


def c2_hopf():
    """Group algebra of the order-2 group: basis 1, g."""
    pres = c2_presentation()
    return fd_hopf_from_presentation(
        pres,
        comult_gens={"g": {((0,), (0,)): ONE}},
        counit_gens={"g": ONE},
        antipode_gens={"g": {(0,): ONE}},
        label="kC2",
    )


def h4_presentation(cap=6):
    # g*g = 1, x*x = 0, x*g = -g*x; normal words 1, g, x, g*x
    return Presentation(
        [("g", 0), ("x", 0)],
        relations=[{(0, 0): ONE, (): -ONE},
                   {(1, 1): ONE},
                   {(1, 0): ONE, (0, 1): ONE}],
        degree_cap=cap, label="H4")


def h4_hopf():
    """The 4-dimensional Hopf algebra with a grouplike g and a skew
    primitive x: D(x) = x(x)1 + g(x)x, S(x) = -g*x."""
    pres = h4_presentation()
    return fd_hopf_from_presentation(
        pres,
        comult_gens={
            "g": {((0,), (0,)): ONE},
            "x": {((1,), ()): ONE, ((0,), (1,)): ONE},
        },
        counit_gens={"g": ONE, "x": Scalar(())},
        antipode_gens={"g": {(0,): ONE}, "x": {(0, 1): -ONE}},
        label="H4",
    )


def dual_numbers(name="s", cap=6):
    """k[s]/(s^2), the smallest nontrivial module-algebra carrier."""
    return Presentation([(name, 0)], relations=[{(0, 0): ONE}],
                        degree_cap=cap, label="k[%s]" % name)


def quantum_plane(cap=6):
    """x*y = q*y*x with normal words y..y x..x."""
    return Presentation(
        [("y", 0), ("x", 0)],
        relations=[{(1, 0): ONE, (0, 1): -Q}],
        precedence=["y", "x"],
        degree_cap=cap, label="plane")


def quantum_plane_calculus(cap=6):
    """Calculus on the quantum plane: generators x, y, dx, dy with the
    standard commutation rule set, differentials rightmost.  The degree-2
    relations are forced by differentiating the degree-1 ones; the
    PresentedForms gate re-derives and checks that closure."""
    return Presentation(
        [("y", 0), ("x", 0), ("dy", 1), ("dx", 1)],
        relations=[
            {(1, 0): ONE, (0, 1): -Q},
            {(3, 1): ONE, (1, 3): -qpow(-2)},
            {(3, 0): ONE, (0, 3): -qpow(-1)},
            {(2, 0): ONE, (0, 2): -qpow(-2)},
            {(2, 1): ONE, (1, 2): -qpow(-1), (0, 3): ONE - qpow(-2)},
            {(2, 2): ONE},
            {(3, 3): ONE},
            {(3, 2): ONE, (2, 3): qpow(-1)},
        ],
        precedence=["y", "x", "dy", "dx"],
        degree_cap=cap, label="Omega(plane)")


def quantum_plane_d():
    """Generator-level differential for the plane calculus."""
    return {"y": {(2,): ONE}, "x": {(3,): ONE},
            "dy": {}, "dx": {}}


def sign_action(cap=6):
    """kC2 acting on k[s]/(s^2) by g.s = -s."""
    return ModuleAlgebraAction(c2_hopf(), dual_numbers("s", cap),
                               {("g", "s"): {(0,): -ONE}})


def h4_action(cap=6):
    """H4 acting on k[u]/(u^2) by g.u = -u and x.u = 1."""
    return ModuleAlgebraAction(h4_hopf(), dual_numbers("u", cap),
                               {("g", "u"): {(0,): -ONE},
                                ("x", "u"): {(): ONE}})
