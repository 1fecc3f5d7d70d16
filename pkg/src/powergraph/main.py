import sys

import click

from powergraph.constants import DEFAULT_FORMAT, DEFAULT_TRIALS, FAMILY_CONFIG
from powergraph.errors import GraphValidationError
from powergraph.models.run_models import CommandResult
from powergraph.system.parameters import build_run_config, parse_int_set, parse_m_values
from powergraph.system.toolkit_system import PowerGraphSystem
from powergraph.utils.json_export import to_json
from powergraph.utils.logging_utils import safe_print, safe_print_error, setup_logging

_EXAMPLES = """\
  powergraph gen Gm --r 7 --m 5 -o g.txt
  powergraph verify g.txt --r 7
  powergraph gen Hm --r 6 --m 1 --loops -o h.txt
  powergraph claims h.txt --r 6
  powergraph convergence Hm --r 6 --m 1..5
  powergraph scan --n 24 --d 4 --r 5 --trials 50 --seed 7"""


def _emit(ctx: click.Context, result: CommandResult) -> None:
    if result.error:
        safe_print_error(f"error: {result.error}")
    elif ctx.obj["format"] == "json":
        safe_print(to_json(result.records))
    else:
        for line in result.lines:
            safe_print(line)
    ctx.exit(result.exit_code)


def _run(ctx: click.Context, subcommand: str, **params) -> None:
    try:
        config = build_run_config(subcommand, format=ctx.obj["format"], **params)
    except GraphValidationError as e:
        result = CommandResult(subcommand=subcommand, exit_code=2, error=str(e))
    else:
        result = PowerGraphSystem().executar(config)
    _emit(ctx, result)


@click.group(epilog=_EXAMPLES)
@click.option("--verbose", "-v", is_flag=True, help="Logs INFO em stderr.")
@click.option(
    "--format",
    "output_format",
    type=click.Choice(["tsv", "json"]),
    default=DEFAULT_FORMAT,
    help="Formato da saída.",
)
@click.pass_context
def cli(ctx: click.Context, verbose: bool, output_format: str) -> None:
    """Potências de grafos: geradores, cotas exatas e auditorias."""
    setup_logging(verbose)
    ctx.ensure_object(dict)
    ctx.obj["format"] = output_format


@cli.command()
@click.argument("family", type=click.Choice(sorted(FAMILY_CONFIG)))
@click.option("--r", type=int, help="Expoente (Gm/Hm) ou potência a auditar.")
@click.option("--m", type=int, help="Parâmetro da família Gm/Hm.")
@click.option("--p", type=int, help="Primo do grafo de Cayley.")
@click.option("--a", "a_text", help="Conjunto A do Cayley, ex. 1,2.")
@click.option("--n", type=int, help="Ordem do regular aleatório.")
@click.option("--d", type=int, help="Grau do regular aleatório.")
@click.option("--loops", is_flag=True, help="Acrescenta um laço em cada vértice.")
@click.option("--seed", type=int, help="Semente; sem ela vale default_seed da configuração.")
@click.option("-o", "--output", "output_path", type=click.Path(dir_okay=False))
@click.pass_context
def gen(ctx, family, r, m, p, a_text, n, d, seed, loops, output_path):
    """Gera uma família, grava lista de arestas, blueprint e auditoria."""
    try:
        a = parse_int_set(a_text) if a_text else None
    except GraphValidationError as e:
        _emit(ctx, CommandResult(subcommand="gen", exit_code=2, error=str(e)))
        return
    _run(ctx, "gen", family=family, r=r, m=m, p=p, a=a, n=n, d=d, seed=seed, loops=loops, output_path=output_path)


@cli.command()
@click.argument("input_path", type=click.Path(dir_okay=False))
@click.option("--r", type=int, required=True)
@click.option("-o", "--output", "output_path", type=click.Path(dir_okay=False))
@click.pass_context
def power(ctx, input_path, r, output_path):
    """Calcula G^r."""
    _run(ctx, "power", input_path=input_path, r=r, output_path=output_path)


@cli.command()
@click.argument("input_path", type=click.Path(dir_okay=False))
@click.option("--r", type=int, required=True)
@click.option("--cayley", is_flag=True, help="Marca o grafo como Cayley de Z_p.")
@click.option("--all", "all_theorems", is_flag=True, help="Um veredito por teorema.")
@click.pass_context
def verify(ctx, input_path, r, cayley, all_theorems):
    """Veredito da cota inferior aplicável."""
    _run(ctx, "verify", input_path=input_path, r=r, cayley=cayley, all_theorems=all_theorems)


@cli.command()
@click.argument("input_path", type=click.Path(dir_okay=False))
@click.option("--r", type=int, required=True)
@click.option("--seed", type=int, help="Semente; sem ela vale default_seed da configuração.")
@click.pass_context
def claims(ctx, input_path, r, seed):
    """Audita as afirmações C1..C8 num grafo com laços."""
    _run(ctx, "claims", input_path=input_path, r=r, seed=seed)


@cli.command()
@click.argument("family", type=click.Choice(["Gm", "Hm"]))
@click.option("--r", type=int, required=True)
@click.option("--m", "m_text", required=True, help="Faixa de m, ex. 1..5 ou 3,5,10.")
@click.pass_context
def convergence(ctx, family, r, m_text):
    """Tabela m, ordem, razão, cota e gap."""
    try:
        m_values = parse_m_values(m_text)
    except GraphValidationError as e:
        _emit(ctx, CommandResult(subcommand="convergence", exit_code=2, error=str(e)))
        return
    _run(ctx, "convergence", family=family, r=r, m_values=m_values)


@cli.command()
@click.option("--n", type=int, required=True)
@click.option("--d", type=int, required=True)
@click.option("--r", type=int, required=True)
@click.option("--trials", type=int, default=DEFAULT_TRIALS)
@click.option("--seed", type=int, help="Semente; sem ela vale default_seed da configuração.")
@click.option("--loops", is_flag=True, help="Também verifica o teorema com laços.")
@click.pass_context
def scan(ctx, n, d, r, trials, seed, loops):
    """Varredura de teoremas sobre regulares aleatórios conexos."""
    _run(ctx, "scan", n=n, d=d, r=r, trials=trials, seed=seed, loops=loops)


def kickoff():
    try:
        cli(obj={})
    except Exception as e:
        safe_print_error(f"Erro na execução: {e}")
        sys.exit(1)


if __name__ == "__main__":
    kickoff()
