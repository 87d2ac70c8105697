"""Tools for the multicolor Turán number ex_{C5}(C3, n): constructions,
certificate verification, exact small-n search and per-instance analysis."""

from .analyzer import (AnalysisReport, AnalyzerConfig, BlowupPartition, best_blowup_partition,
                       bounds_table, deviation_stats, f_eval, great_cycle_counts, structure_report,
                       vertex_split_bound)
from .certificate import parse, render
from .constructions import (TnValue, b, blowup_packing, k5_star, perturbed_construction, t)
from .errors import (BadClass, BadN, BudgetExhausted, DuplicateEdge, InvalidCertificate, MctError,
                     PackingNotFound, ParseError, PatternTooLarge, PreconditionViolated, TooLarge)
from .graph import (TRIANGLE, ColoredGraph, PatternGraph, build_colored_graph, degree,
                    edges_inside_neighborhood, find_multicolored_copy)
from .solver import (SearchOptions, SolveResult, brute_force_oracle, enumerate_candidate_cycles,
                     solve_exact)
from .verifier import (TriangleCensus, VerifyReport, check_kovacs_nagy, double_count_check,
                       triangle_census, verify)

__version__ = "0.1.0"
