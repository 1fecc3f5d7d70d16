import logging
from typing import Callable, Dict, Optional

from powergraph.bounds.verdicts import verify, verify_all
from powergraph.constants import (
    EXIT_HOLDS,
    EXIT_INAPPLICABLE,
    EXIT_VIOLATION,
    FAMILY_CONFIG,
)
from powergraph.core.edgelist import read_edge_list
from powergraph.core.power import add_loops, format_power_result, graph_power
from powergraph.diagnostics.claims import audit_claims
from powergraph.errors import (
    GraphValidationError,
    HypothesisError,
    PowerGraphError,
)
from powergraph.flow.scan_flow import ScanFlow
from powergraph.flow.state import ScanState
from powergraph.generators.audit import audit_cayley, audit_layered, audit_random, audit_with_loops
from powergraph.generators.cayley import cayley_graph
from powergraph.generators.convergence import convergence_table, family_for
from powergraph.generators.layered import build_gm, build_hm
from powergraph.generators.random_regular import random_regular_connected
from powergraph.models.bound_models import Verdict
from powergraph.models.run_models import CommandResult, RunConfig
from powergraph.system.settings import Settings, load_settings
from powergraph.utils.console_time import Console
from powergraph.utils.reporting import default_output_path, export_construction

logger = logging.getLogger(__name__)

_VERDICT_EXIT = {
    "holds": EXIT_HOLDS,
    "violation": EXIT_VIOLATION,
    "inapplicable": EXIT_INAPPLICABLE,
}


def _require(value, flag: str, family: str):
    if value is None or value == []:
        raise GraphValidationError(f"{family} requires {flag}")
    return value


class PowerGraphSystem:
    def __init__(self, settings: Optional[Settings] = None):
        self.familias = FAMILY_CONFIG
        self.settings = settings or load_settings()
        self._executors: Dict[str, Callable[[RunConfig], CommandResult]] = {
            "gen": self.executar_gen,
            "power": self.executar_power,
            "verify": self.executar_verify,
            "claims": self.executar_claims,
            "convergence": self.executar_convergence,
            "scan": self.executar_scan,
        }

    @property
    def workers(self) -> int:
        return self.settings.threads

    def seed_for(self, config: RunConfig) -> int:
        return self.settings.default_seed if config.seed is None else config.seed

    def executar(self, config: RunConfig) -> CommandResult:
        """Despacha o subcomando e converte exceções em códigos de saída."""
        executor = self._executors[config.subcommand]
        Console.time(config.subcommand.upper())
        try:
            return executor(config)
        except (GraphValidationError, HypothesisError, FileNotFoundError) as e:
            logger.warning(f"⚠️ {config.subcommand}: {e}")
            return CommandResult(subcommand=config.subcommand, exit_code=EXIT_INAPPLICABLE, error=str(e))
        except PowerGraphError as e:
            logger.error(f"❌ {config.subcommand}: {e}")
            return CommandResult(subcommand=config.subcommand, exit_code=EXIT_VIOLATION, error=str(e))
        finally:
            Console.time_end(config.subcommand.upper())

    def executar_gen(self, config: RunConfig) -> CommandResult:
        family = config.family
        logger.info(f"{self.familias[family]['emoji']} Gerando {self.familias[family]['nome']}")

        blueprint = None
        if family in ("Gm", "Hm"):
            r = _require(config.r, "--r", family)
            m = _require(config.m, "--m", family)
            build = build_gm if family == "Gm" else build_hm
            graph, blueprint = build(r, m)
            audit = audit_layered(graph, blueprint)
            description = f"r{r}_m{m}"
            comments = (f"family={family} r={r} m={m}",)
        elif family == "cayley":
            p = _require(config.p, "--p", family)
            A = _require(config.a, "--a", family)
            graph = cayley_graph(p, A)
            audit = audit_cayley(graph, p, A, r=config.r)
            description = f"p{p}_a{'_'.join(map(str, A))}"
            comments = (f"family=cayley p={p} A={','.join(map(str, A))}",)
        else:
            n = _require(config.n, "--n", family)
            d = _require(config.d, "--d", family)
            seed = self.seed_for(config)
            graph = random_regular_connected(n, d, seed, self.settings.attempt_budget)
            audit = audit_random(graph, n, d, r=config.r)
            description = f"n{n}_d{d}_seed{seed}"
            comments = (f"family=random n={n} d={d} seed={seed}",)

        if config.loops:
            graph = add_loops(graph)
            audit = audit_with_loops(graph, audit)
            description += "_loops"
            comments += ("loops=added",)

        path = config.output_path or default_output_path(self.settings.output_dir, family, description)
        paths = export_construction(graph, audit, path, blueprint=blueprint, comments=comments)

        record = audit.model_dump(mode="json")
        record["files"] = paths
        return CommandResult(
            subcommand="gen",
            exit_code=EXIT_HOLDS if audit.passed else EXIT_VIOLATION,
            lines=[audit.audit_line()],
            records=[record],
        )

    def executar_power(self, config: RunConfig) -> CommandResult:
        graph = read_edge_list(config.input_path)
        result = graph_power(graph, config.r, workers=self.workers)
        text = format_power_result(result)

        if config.output_path:
            with open(config.output_path, "w", encoding="utf-8") as f:
                f.write(text)
            lines = [result.stats_header()]
        else:
            lines = text.rstrip("\n").split("\n")

        record = {
            "r": result.r,
            "e_base": result.base_edges,
            "e_power": result.power_edges,
            "output": config.output_path,
        }
        return CommandResult(subcommand="power", exit_code=EXIT_HOLDS, lines=lines, records=[record])

    def executar_verify(self, config: RunConfig) -> CommandResult:
        graph = read_edge_list(config.input_path)
        if config.all_theorems:
            verdicts = verify_all(graph, config.r, cayley=config.cayley, workers=self.workers)
            lines = [f"{verdict.theorem} {verdict.to_line()}" for verdict in verdicts]
            exit_code = self._combined_exit(verdicts)
        else:
            verdicts = [verify(graph, config.r, cayley=config.cayley, workers=self.workers)]
            lines = [verdicts[0].to_line()]
            exit_code = _VERDICT_EXIT[verdicts[0].status]

        return CommandResult(
            subcommand="verify",
            exit_code=exit_code,
            lines=lines,
            records=[verdict.to_record() for verdict in verdicts],
        )

    @staticmethod
    def _combined_exit(verdicts: list[Verdict]) -> int:
        statuses = {verdict.status for verdict in verdicts}
        if "violation" in statuses:
            return EXIT_VIOLATION
        if "holds" in statuses:
            return EXIT_HOLDS
        return EXIT_INAPPLICABLE

    def executar_claims(self, config: RunConfig) -> CommandResult:
        graph = read_edge_list(config.input_path)
        report = audit_claims(
            graph,
            config.r,
            seed=self.seed_for(config),
            exhaustive_limit=self.settings.exhaustive_limit,
            sample_size=self.settings.sample_size,
            workers=self.workers,
        )
        if not report.applicable:
            exit_code = EXIT_INAPPLICABLE
        else:
            exit_code = EXIT_HOLDS if report.ok else EXIT_VIOLATION

        return CommandResult(
            subcommand="claims",
            exit_code=exit_code,
            lines=report.to_lines(),
            records=[report.model_dump(mode="json")],
        )

    def executar_convergence(self, config: RunConfig) -> CommandResult:
        expected = family_for(config.r)
        if config.family != expected:
            residue = "r ≡ 0 mod 3" if expected == "Hm" else "r ≢ 0 mod 3"
            raise GraphValidationError(f"{config.family} does not match r={config.r}; {residue} uses {expected}")
        if not config.m_values:
            raise GraphValidationError("convergence requires --m")

        table = convergence_table(config.r, config.m_values, workers=self.workers)
        ok = table.gap_strictly_decreasing and all(row.audit_passed for row in table.rows)
        return CommandResult(
            subcommand="convergence",
            exit_code=EXIT_HOLDS if ok else EXIT_VIOLATION,
            lines=table.to_lines(),
            records=[row.model_dump(mode="json") for row in table.rows],
        )

    def executar_scan(self, config: RunConfig) -> CommandResult:
        state = ScanState(
            n=config.n,
            d=config.d,
            r=config.r,
            trials=config.trials,
            seed=self.seed_for(config),
            loops=config.loops,
        )
        flow = ScanFlow(state, workers=self.workers)
        lines = flow.kickoff()

        failed = state.violations or state.count("error")
        return CommandResult(
            subcommand="scan",
            exit_code=EXIT_VIOLATION if failed else EXIT_HOLDS,
            lines=lines,
            records=[outcome.model_dump(mode="json") for outcome in state.ordered()],
        )
