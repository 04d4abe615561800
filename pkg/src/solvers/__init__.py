from typing import Callable, Sequence

from src.errors import InvalidParameterError
from src.model.groups import MulticastGroup
from src.solvers.dp import DPConfig, DPSolver, solve_dp
from src.solvers.exhaustive import ExhaustiveConfig, ExhaustiveSolver, solve_exhaustive
from src.solvers.pdt import PDTSolver, solve_pdt
from src.solvers.report import ALGORITHMS, GreedyState, SolverReport
from src.solvers.sdt import SDTSolver, solve_sdt

SOLVERS: dict[str, Callable[..., SolverReport]] = {
    "exhaustive": solve_exhaustive,
    "dp": solve_dp,
    "sdt": solve_sdt,
    "pdt": solve_pdt,
}

EXACT_SOLVERS = ("dp", "exhaustive")


def run_solver(name: str, groups: Sequence[MulticastGroup], t_lim: float, t: int) -> SolverReport:
    try:
        solve = SOLVERS[name]
    except KeyError:
        raise InvalidParameterError(f"unknown algorithm {name!r}; choose from {', '.join(ALGORITHMS)}")
    return solve(groups, t_lim, t)


__all__ = [
    "ALGORITHMS",
    "DPConfig",
    "DPSolver",
    "EXACT_SOLVERS",
    "ExhaustiveConfig",
    "ExhaustiveSolver",
    "GreedyState",
    "PDTSolver",
    "SDTSolver",
    "SOLVERS",
    "SolverReport",
    "run_solver",
    "solve_dp",
    "solve_exhaustive",
    "solve_pdt",
    "solve_sdt",
]
