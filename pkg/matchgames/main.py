#!/usr/bin/env python3

import logging
import sys

from matchgames import __version__

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


def version(short=False):
    if short:
        print(__version__, file=sys.stderr)
    else:
        print("matchgames version %s" % __version__, file=sys.stderr)


def _group_parser(prog: str, description: str, actions: list[str]):
    import argparse as _argparse
    parser = _argparse.ArgumentParser(prog=prog, add_help=True, description=description)
    parser.add_argument("action", choices=actions)
    return parser


def command_corr(rest: list[str]) -> int:
    import argparse as _argparse
    if rest[:1] == ["build"]:
        build_parser = _argparse.ArgumentParser(
            prog="matchgames corr build",
            add_help=True,
            description="Build an explicit perfect nonsignaling correlation",
        )
        build_parser.add_argument("kind", choices=["degree2", "sharp", "odd-cycle", "fpm"])
        build_parser.add_argument("file", type=str, help="Graph file")
        build_parser.add_argument("-o", "--output", help="Write the correlation here instead of stdout")
        build_args = build_parser.parse_args(rest[1:])

        from .cmd.corr_command import command_corr_build
        return command_corr_build(build_args.kind, build_args.file, output=build_args.output)
    if rest[:1] == ["verify"]:
        verify_parser = _argparse.ArgumentParser(
            prog="matchgames corr verify",
            add_help=True,
            description="Check a correlation file against a game: validity, nonsignaling, winning probability",
        )
        verify_parser.add_argument("game", type=str, help="Game table file or graph file")
        verify_parser.add_argument("corr", type=str, help="Correlation file")
        verify_parser.add_argument("--game", dest="game_kind", choices=["bpm", "pm", "fpm", "hpm"],
                                   help="Game to build when GAME is a graph file")
        verify_parser.add_argument("--json", action="store_true", default=False)
        verify_args = verify_parser.parse_args(rest[1:])

        from .cmd.corr_command import command_corr_verify
        return command_corr_verify(verify_args.game, verify_args.corr,
                                   game_kind=verify_args.game_kind, as_json=verify_args.json)
    _group_parser("matchgames corr", "Build or verify correlations", ["build", "verify"]).parse_args(rest[:1])
    return 2


def command_sos(rest: list[str]) -> int:
    import argparse as _argparse
    if rest[:1] == ["verify-k32"]:
        k32_parser = _argparse.ArgumentParser(
            prog="matchgames sos verify-k32",
            add_help=True,
            description="Verify the sum-of-squares bound 5/6 for the K_{3,2} matching game",
        )
        k32_parser.add_argument("--residual", action="store_true", default=False,
                                help="Print the residual of the failing two-pair decomposition")
        k32_args = k32_parser.parse_args(rest[1:])

        from .cmd.sos_command import command_sos_verify_k32
        return command_sos_verify_k32(show_residual=k32_args.residual)
    if rest[:1] == ["verify-sync"]:
        sync_parser = _argparse.ArgumentParser(
            prog="matchgames sos verify-sync",
            add_help=True,
            description="Verify the synchronous bound 1/2 + 1/n for the K_{n,2} matching game",
        )
        sync_parser.add_argument("n", type=int)
        sync_args = sync_parser.parse_args(rest[1:])

        from .cmd.sos_command import command_sos_verify_sync
        return command_sos_verify_sync(sync_args.n)
    _group_parser("matchgames sos", "Sum-of-squares checks", ["verify-k32", "verify-sync"]).parse_args(rest[:1])
    return 2


def command_quantum(rest: list[str]) -> int:
    import argparse as _argparse
    if rest[:1] == ["k32-demo"]:
        _argparse.ArgumentParser(
            prog="matchgames quantum k32-demo",
            add_help=True,
            description="Evaluate the optimal qubit strategy for the K_{3,2} matching game",
        ).parse_args(rest[1:])

        from .cmd.quantum_command import command_quantum_k32_demo
        return command_quantum_k32_demo()
    if rest[:1] == ["sweep"]:
        sweep_parser = _argparse.ArgumentParser(
            prog="matchgames quantum sweep",
            add_help=True,
            description="Random-restart seesaw over binary observables for the K_{n,2} matching game",
        )
        sweep_parser.add_argument("n", type=int)
        sweep_parser.add_argument("--restarts", type=int, default=200)
        sweep_parser.add_argument("--seed", type=int, help="Default: the configured seed (0)")
        sweep_parser.add_argument("--dimension", type=int, default=2, help="Local dimension, default: 2")
        sweep_args = sweep_parser.parse_args(rest[1:])

        from .cmd.quantum_command import command_quantum_sweep
        return command_quantum_sweep(sweep_args.n, restarts=sweep_args.restarts,
                                     seed=sweep_args.seed, dimension=sweep_args.dimension)
    _group_parser("matchgames quantum", "Quantum strategy numerics", ["k32-demo", "sweep"]).parse_args(rest[:1])
    return 2


def command_qpm(rest: list[str]) -> int:
    import argparse as _argparse
    if rest[:1] == ["verify"]:
        verify_parser = _argparse.ArgumentParser(
            prog="matchgames qpm verify",
            add_help=True,
            description="Verify a quantum perfect matching certificate",
        )
        verify_parser.add_argument("graph", type=str)
        verify_parser.add_argument("cert", type=str)
        verify_args = verify_parser.parse_args(rest[1:])

        from .cmd.qpm_command import command_qpm_verify
        return command_qpm_verify(verify_args.graph, verify_args.cert)
    if rest[:1] == ["search"]:
        search_parser = _argparse.ArgumentParser(
            prog="matchgames qpm search",
            add_help=True,
            description="Heuristic search for a quantum perfect matching certificate in dimension d",
        )
        search_parser.add_argument("graph", type=str)
        search_parser.add_argument("d", type=int)
        search_parser.add_argument("--iterations", type=int, default=500)
        search_parser.add_argument("--restarts", type=int, default=4)
        search_parser.add_argument("--seed", type=int, help="Default: the configured seed (0)")
        search_parser.add_argument("-o", "--output", help="Write the certificate here instead of stdout")
        search_args = search_parser.parse_args(rest[1:])

        from .cmd.qpm_command import command_qpm_search
        return command_qpm_search(search_args.graph, search_args.d, iterations=search_args.iterations,
                                  restarts=search_args.restarts, seed=search_args.seed, output=search_args.output)
    _group_parser("matchgames qpm", "Quantum perfect matching certificates", ["verify", "search"]).parse_args(rest[:1])
    return 2


def split_global_args(argv: list[str]) -> tuple[list[str], str | None, list[str]]:
    global_args = []
    i = 0

    while i < len(argv):
        arg = argv[i]

        if arg == "--":
            if i + 1 < len(argv):
                return global_args, argv[i + 1], argv[i + 2:]
            return global_args, None, []

        if arg in ("-h", "--help"):
            global_args.append(arg)
            return global_args, None, argv[i + 1:]

        if arg in ("-f", "--file", "--log-level"):
            global_args.append(arg)
            if i + 1 < len(argv):
                global_args.append(argv[i + 1])
                i += 2
                continue
            i += 1
            continue

        if arg.startswith(("--file=", "--log-level=")):
            global_args.append(arg)
            i += 1
            continue

        if arg.startswith("-"):
            global_args.append(arg)
            i += 1
            continue

        return global_args, arg, argv[i + 1:]

    return global_args, None, []


def cli():
    import argparse
    parser = argparse.ArgumentParser(
        formatter_class=argparse.RawDescriptionHelpFormatter,
        description="Perfect matching nonlocal games: exact values, correlations and certificates",
        usage="matchgames [OPTIONS] COMMAND",
 epilog="""Commands:
  analyze     Full matching spectrum of a graph, bipartite graph or hypergraph
  value       Exact classical or nonsignaling value of a matching game
  corr        Build or verify correlations
  reduce      Sharp reduction of a bipartite graph
  sos         Verify sum-of-squares certificates
  quantum     Quantum strategies for the K_{n,2} matching game
  qpm         Verify or search quantum perfect matching certificates
  explore     Exploratory checks (half-integral triangle-avoiding matchings)
  version     Show the matchgames version information
 """,
    )
    parser.add_argument("-v", "--version", action="store_true", help="Show the matchgames version information")
    parser.add_argument("--short", action="store_true", default=False, help="Shows only matchgames's version number")
    parser.add_argument("-f", "--file", type=str, help="Settings file (default: matchgames.yml if present)")
    parser.add_argument("--log-level", choices=LOG_LEVELS, default="WARNING", help="default: WARNING")

    global_argv, command, rest = split_global_args(sys.argv[1:])
    args = parser.parse_args(global_argv)
    args.command = command

    if args.command == "version" or (args.version and not args.command):
        version(short=args.short)
        sys.exit(0)

    if not args.command:
        parser.print_help()
        sys.exit(1)

    logging.basicConfig(stream=sys.stderr, level=args.log_level, format="%(levelname)s %(name)s: %(message)s")

    from .config import load_settings, set_settings
    from .errors import MatchGamesError
    try:
        set_settings(load_settings(args.file))
    except OSError as e:
        print(f"Error: cannot read settings {args.file}: {e.strerror}", file=sys.stderr)
        sys.exit(2)
    except MatchGamesError as e:
        print(f"Error: {e.error_message}", file=sys.stderr)
        sys.exit(2)

    if args.command == "analyze":
        import argparse as _argparse
        analyze_parser = _argparse.ArgumentParser(
            prog="matchgames analyze",
            add_help=True,
            description="Matching statuses with witnesses, nonsignaling cross-checks and game values",
        )
        analyze_parser.add_argument("file", type=str, help="Graph, bipartite graph or hypergraph file")
        analyze_parser.add_argument("--json", action="store_true", default=False, help="Machine-readable output")
        analyze_parser.add_argument("--timing", action="store_true", default=False,
                                    help="Include timing in --json output")
        analyze_args = analyze_parser.parse_args(rest)

        from .cmd.analyze_command import command_analyze
        sys.exit(command_analyze(analyze_args.file, as_json=analyze_args.json, timing=analyze_args.timing))
    elif args.command == "value":
        import argparse as _argparse
        value_parser = _argparse.ArgumentParser(
            prog="matchgames value",
            add_help=True,
            description="Exact value of a matching game",
        )
        value_parser.add_argument("file", type=str, help="Graph file")
        value_parser.add_argument("--game", choices=["bpm", "pm", "fpm", "hpm"], required=True)
        value_parser.add_argument("--model", choices=["classical", "ns"], required=True)
        value_parser.add_argument("--sync", action="store_true", default=False, help="Synchronous strategies only")
        value_parser.add_argument("--json", action="store_true", default=False)
        value_args = value_parser.parse_args(rest)

        from .cmd.value_command import command_value
        sys.exit(command_value(value_args.file, value_args.game, value_args.model,
                               synchronous=value_args.sync, as_json=value_args.json))
    elif args.command == "corr":
        sys.exit(command_corr(rest))
    elif args.command == "reduce":
        import argparse as _argparse
        reduce_parser = _argparse.ArgumentParser(
            prog="matchgames reduce",
            add_help=True,
            description="Peel degree-1 left vertices with their neighbours; exit 1 if a left vertex is left lonely",
        )
        reduce_parser.add_argument("action", choices=["sharp"])
        reduce_parser.add_argument("file", type=str, help="Bipartite graph file")
        reduce_parser.add_argument("--json", action="store_true", default=False)
        reduce_args = reduce_parser.parse_args(rest)

        from .cmd.reduce_command import command_reduce_sharp
        sys.exit(command_reduce_sharp(reduce_args.file, as_json=reduce_args.json))
    elif args.command == "sos":
        sys.exit(command_sos(rest))
    elif args.command == "quantum":
        sys.exit(command_quantum(rest))
    elif args.command == "qpm":
        sys.exit(command_qpm(rest))
    elif args.command == "explore":
        import argparse as _argparse
        explore_parser = _argparse.ArgumentParser(
            prog="matchgames explore",
            add_help=True,
            description="Search for a triangle-avoiding fractional perfect matching with values in {0, 1/2, 1}",
        )
        explore_parser.add_argument("action", choices=["half-integral"])
        explore_parser.add_argument("file", type=str, help="Graph file")
        explore_args = explore_parser.parse_args(rest)

        from .cmd.explore_command import command_explore_half_integral
        sys.exit(command_explore_half_integral(explore_args.file))
    else:
        print(f"unknown command: {args.command}", file=sys.stderr)
        parser.print_help()
        sys.exit(2)


if __name__ == "__main__":
    cli()
