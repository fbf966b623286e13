"""Command-line client for the filtering service.

By default commands run against an in-process instance of the FastAPI app;
pass ``--url`` to talk to a remote server instead (start one with
``uvicorn graphfilt.service:app``).
"""

from __future__ import annotations

import sys
from pathlib import Path

import click
import httpx

from . import __version__


def _client(url):
    if url:
        return httpx.Client(base_url=url, timeout=None)
    import warnings

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        from fastapi.testclient import TestClient

    from .service import app

    return TestClient(app)


def _post(ctx, path, payload):
    with _client(ctx.obj["url"]) as client:
        resp = client.post(path, json=payload)
    if resp.status_code != 200:
        try:
            body = resp.json()
            msg = f"{body.get('error', 'error')}: {body.get('detail', resp.text)}"
        except Exception:
            msg = resp.text
        click.echo(f"error: {msg}", err=True)
        sys.exit(1)
    return resp.json()


def _write(path, text):
    if path:
        Path(path).write_text(text)
        click.echo(f"wrote {path}")
    else:
        click.echo(text, nl=False)


def _bank_options(f):
    f = click.option("--bank", "bank_name", default="itersine",
                     type=click.Choice(["itersine", "mexican-hat", "identity"]),
                     show_default=True, help="Filterbank family.")(f)
    f = click.option("--num-filters", "-R", default=8, show_default=True)(f)
    f = click.option("--num-scales", default=1, show_default=True)(f)
    f = click.option("--adapted/--non-adapted", default=False, show_default=True,
                     help="Warp the bank by the empirical spectral CDF.")(f)
    return f


def _bank_payload(bank_name, num_filters, num_scales, adapted):
    return {"name": bank_name, "num_filters": num_filters,
            "num_scales": num_scales, "adapted": adapted}


@click.group()
@click.version_option(__version__)
@click.option("--url", default=None, help="Remote service URL (default: in-process).")
@click.option("--seed", default=1, show_default=True, help="Default RNG seed.")
@click.option("--out", default=None, help="Default output path (stdout otherwise).")
@click.option("--threads", default=1, show_default=True, help="Worker threads for benchmarks.")
@click.option("--oracle-cap", default=2000, show_default=True,
              help="Max n for dense oracle computations.")
@click.pass_context
def main(ctx, url, seed, out, threads, oracle_cap):
    """Graph-signal filtering: generators, filters and benchmark experiments."""
    ctx.obj = {"url": url, "seed": seed, "out": out, "threads": threads,
               "oracle_cap": oracle_cap}


@main.command()
@click.argument("family", type=click.Choice(["er", "sensor"]))
@click.option("--n", required=True, type=int)
@click.option("--p", type=float, default=None, help="Edge probability (er).")
@click.option("--k", type=int, default=None, help="Neighbor count (sensor).")
@click.option("--seed", type=int, default=None)
@click.option("--out", default=None)
@click.pass_context
def generate(ctx, family, n, p, k, seed, out):
    """Generate a random graph and write it as an edge list."""
    seed = ctx.obj["seed"] if seed is None else seed
    out = ctx.obj["out"] if out is None else out
    body = _post(ctx, "/generate", {"family": family, "n": n, "p": p, "k": k, "seed": seed})
    click.echo(f"generated {family} graph: n={body['n']} edges={body['num_edges']}", err=True)
    _write(out, body["edge_list"])


@main.command("filter")
@click.argument("graph_path", type=click.Path(exists=True))
@click.argument("signal_path", type=click.Path(exists=True))
@_bank_options
@click.option("--method", default="exact", show_default=True,
              type=click.Choice(["exact", "chebyshev", "lanczos"]))
@click.option("--order", "-M", default=30, show_default=True)
@click.option("--eps", type=float, default=None, help="Adaptive Lanczos tolerance.")
@click.option("--j", default=3, show_default=True, help="Lookahead for the error estimate.")
@click.option("--out", default=None, help="Output path; one file per filter.")
@click.pass_context
def filter_cmd(ctx, graph_path, signal_path, bank_name, num_filters, num_scales,
               adapted, method, order, eps, j, out):
    """Filter a signal file with a filterbank."""
    out = ctx.obj["out"] if out is None else out
    body = _post(ctx, "/filter", {
        "graph": Path(graph_path).read_text(),
        "signal": Path(signal_path).read_text(),
        "bank": _bank_payload(bank_name, num_filters, num_scales, adapted),
        "method": method, "order": order, "eps": eps, "j": j,
        "oracle_cap": ctx.obj["oracle_cap"],
    })
    signals, names = body["signals"], body["filters"]
    if out is None:
        for name, text in zip(names, signals):
            click.echo(f"# {name}")
            click.echo(text, nl=False)
        return
    base = Path(out)
    for idx, (name, text) in enumerate(zip(names, signals)):
        path = base if len(signals) == 1 else base.with_name(
            f"{base.stem}_{idx:03d}{base.suffix}"
        )
        path.write_text(text)
        click.echo(f"wrote {path} ({name})")


@main.command()
@click.argument("graph_path", type=click.Path(exists=True))
@click.option("--bins", default=50, show_default=True)
@click.option("--out", default=None)
@click.pass_context
def spectrum(ctx, graph_path, bins, out):
    """Oracle eigenvalue list and histogram as CSV."""
    out = ctx.obj["out"] if out is None else out
    body = _post(ctx, "/spectrum", {
        "graph": Path(graph_path).read_text(), "bins": bins,
        "oracle_cap": ctx.obj["oracle_cap"],
    })
    _write(out, body["csv"])


@main.group()
def bench():
    """Experiment sweeps reproduced as CSV."""


def _bench_common(f):
    f = click.option("--seeds", default="1", show_default=True,
                     help="Comma-separated seed list.")(f)
    f = click.option("--num-signals", default=10, show_default=True)(f)
    f = click.option("--out", default=None)(f)
    return f


def _seed_list(seeds):
    try:
        return [int(s) for s in seeds.split(",") if s.strip()]
    except ValueError:
        raise click.BadParameter(f"bad seed list {seeds!r}")


@bench.command("error-vs-order")
@click.option("--family", default="er", type=click.Choice(["er", "sensor"]), show_default=True)
@click.option("--n", default=500, show_default=True)
@click.option("--p", default=0.04, show_default=True)
@click.option("--k", default=6, show_default=True)
@_bank_options
@click.option("--m-min", default=2, show_default=True)
@click.option("--m-max", default=60, show_default=True)
@click.option("--step", default=2, show_default=True)
@_bench_common
@click.pass_context
def error_vs_order(ctx, family, n, p, k, bank_name, num_filters, num_scales,
                   adapted, m_min, m_max, step, seeds, num_signals, out):
    """Chebyshev vs Lanczos error against the approximation order."""
    out = ctx.obj["out"] if out is None else out
    body = _post(ctx, "/bench/error-vs-order", {
        "family": family, "n": n, "p": p, "k": k, "seeds": _seed_list(seeds),
        "bank": _bank_payload(bank_name, num_filters, num_scales, adapted),
        "M_min": m_min, "M_max": m_max, "step": step, "num_signals": num_signals,
        "oracle_cap": ctx.obj["oracle_cap"], "threads": ctx.obj["threads"],
    })
    _write(out, body["csv"])


@bench.command("error-vs-estimate")
@click.option("--family", default="er", type=click.Choice(["er", "sensor"]), show_default=True)
@click.option("--n", default=500, show_default=True)
@click.option("--p", default=0.04, show_default=True)
@click.option("--k", default=6, show_default=True)
@_bank_options
@click.option("--j", default=3, show_default=True)
@click.option("--m-min", default=2, show_default=True)
@click.option("--m-max", default=60, show_default=True)
@click.option("--step", default=2, show_default=True)
@_bench_common
@click.pass_context
def error_vs_estimate(ctx, family, n, p, k, bank_name, num_filters, num_scales,
                      adapted, j, m_min, m_max, step, seeds, num_signals, out):
    """True Lanczos error against the lookahead estimate."""
    out = ctx.obj["out"] if out is None else out
    body = _post(ctx, "/bench/error-vs-estimate", {
        "family": family, "n": n, "p": p, "k": k, "seeds": _seed_list(seeds),
        "bank": _bank_payload(bank_name, num_filters, num_scales, adapted),
        "j": j, "M_min": m_min, "M_max": m_max, "step": step,
        "num_signals": num_signals,
        "oracle_cap": ctx.obj["oracle_cap"], "threads": ctx.obj["threads"],
    })
    _write(out, body["csv"])


@bench.command("error-vs-p")
@click.option("--n", default=1000, show_default=True)
@click.option("--p-list", default="0.02,0.05,0.1,0.2,0.3", show_default=True)
@click.option("--order", "-M", "m", default=30, show_default=True)
@_bank_options
@_bench_common
@click.pass_context
def error_vs_p(ctx, n, p_list, m, bank_name, num_filters, num_scales, adapted,
               seeds, num_signals, out):
    """Fixed-order error against the edge probability."""
    out = ctx.obj["out"] if out is None else out
    try:
        ps = [float(x) for x in p_list.split(",") if x.strip()]
    except ValueError:
        raise click.BadParameter(f"bad p list {p_list!r}")
    body = _post(ctx, "/bench/error-vs-p", {
        "n": n, "p_list": ps, "M": m,
        "bank": _bank_payload(bank_name, num_filters, num_scales, adapted),
        "seeds": _seed_list(seeds), "num_signals": num_signals,
        "oracle_cap": ctx.obj["oracle_cap"], "threads": ctx.obj["threads"],
    })
    _write(out, body["csv"])


if __name__ == "__main__":
    main()
