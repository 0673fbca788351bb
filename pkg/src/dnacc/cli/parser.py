import argparse


def _add_channel(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--tau", type=str, required=True, help="Erroneous-copy fraction, e.g. 1, 1/2, 0.25")
    parser.add_argument("--ei", dest="e_i", type=int, required=True, help="Max index errors per read")
    parser.add_argument("--ed", dest="e_d", type=int, default=0, help="Max data errors per read")
    parser.add_argument("--K", type=int, required=True, help="Copies per strand")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dnacc",
        description="DNA-correcting codes: distances, channel oracles, index-code constructions and bounds",
        allow_abbrev=False,
    )
    parser.add_argument("--config", type=str, default=None, help="Path to config YAML")
    parser.add_argument("--logging-config", type=str, default=None, help="Path to logging YAML")
    parser.add_argument("--log-level", type=str, default=None, help="DEBUG, INFO, WARNING or ERROR")
    parser.add_argument("--format", choices=["json", "csv", "text"], default="json", help="Report format")
    parser.add_argument("-o", "--output", type=str, default=None, help="Output file (default: stdout)")
    parser.add_argument("--seed", type=int, default=None, help="64-bit unsigned seed for randomized commands")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("distance", help="DNA-distance between two message files")
    p.add_argument("msg1")
    p.add_argument("msg2")

    p = sub.add_parser("verify-dcc", help="Check whether a codebook is DNA-correcting")
    p.add_argument("codebook")
    _add_channel(p)
    p.add_argument("--mode", choices=["brute", "distance", "both"], default="both")

    p = sub.add_parser("construct", help="Build an index-correcting code and write it as a matrix")
    p.add_argument("--method", choices=["coset", "extend", "search-exact", "search-greedy"], required=True)
    p.add_argument("--l", type=int, default=None, help="Index length")
    p.add_argument("--M", type=int, default=None, help="Strands per message")
    p.add_argument("--d", type=int, default=None, help="Index-distance")
    p.add_argument("--inner", choices=["parity", "repetition", "hamming"], default=None,
                   help="Inner code for --method coset")
    p.add_argument("-i", "--input", type=str, default=None, help="Matrix to extend")
    p.add_argument("--restarts", type=int, default=None, help="Greedy passes")
    p.add_argument("--report", type=str, default=None, help="Where to write the coset construction report")

    p = sub.add_parser("validate", help="Check a matrix file against its index-distance")
    p.add_argument("matrix")
    p.add_argument("--d", type=int, default=None, help="Override the header's d")

    p = sub.add_parser("bounds", help="Upper bounds, construction sizes and exact F")
    p.add_argument("--l", type=int, default=None)
    p.add_argument("--M", type=int, default=None)
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--sweep", type=int, default=None, metavar="K",
                   help="Sweep M = 2..2^K and every d in 1..log2(M)+1")
    p.add_argument("--tau", type=str, default=None, help="Also report the class size A_U for this channel")
    p.add_argument("--K", type=int, default=None)
    p.add_argument("--ei", dest="e_i", type=int, default=None)
    p.add_argument("--L", type=int, default=None, help="Also report the redundancy of the distinct-data space")

    p = sub.add_parser("ball-size", help="Size of an index-distance or DNA-distance ball")
    p.add_argument("--r", type=int, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--M", type=int, help="Permanent-based B_{r,M}")
    group.add_argument("--message", type=str, help="Enumerate B_r(Z) around this message")

    p = sub.add_parser("simulate", help="Sample one channel output")
    p.add_argument("msg")
    _add_channel(p)
    p.add_argument("--worst-case", action="store_true", help="Corrupt floor(tau K) copies at maximal weight")
    p.add_argument("--decode", action="store_true", help="Plurality-decode the sampled pool")
    p.add_argument("--save-pool", type=str, default=None, help="Also write the sampled pool as a read-pool file")

    p = sub.add_parser("decode", help="Decode a read-pool file")
    p.add_argument("pool")
    _add_channel(p)
    target = p.add_mutually_exclusive_group(required=True)
    target.add_argument("--codebook", type=str, help="List every codeword that could have produced the pool")
    target.add_argument("--params", type=str, metavar="M,L,l", help="Plurality-decode a distinct-data message")

    p = sub.add_parser("enumerate", help="Every channel output of a message")
    p.add_argument("msg")
    _add_channel(p)

    return parser
