import argparse
import io
import json
import logging
import sys
from typing import List, Optional, Tuple
from pydantic import ValidationError
from models.cli import CliConfig, Subcommand
from models.code import CodeRecord, EncodeResult, Extension, MinDistResult
from models.tower import TowerParams
from utils.const import (APPENDIX_BS, APPENDIX_DELTAS, SUMRANK_BUDGET, SUMRANK_JOBS, SUMRANK_LOG_LEVEL,
                         SUMRANK_MSRD_BUDGET)
from utils.decoder import decode
from utils.errors import InvalidCodeFile, SumRankError
from utils.gf_tower import tower_from_params, tower_info
from utils.srbch import SRBCHCode, appendix_params, appendix_rows, build_code, generate_table, write_csv
from utils.sum_rank import min_sum_rank_distance_bruteforce
from utils.verify import run_suite

logger = logging.getLogger(__name__)

VALIDATION_EXIT_CODE = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sumrank", description="Sum-rank BCH codes: towers, bounds, codes and decoding.")
    subparsers = parser.add_subparsers(dest="subcommand", required=True)

    tower_options = argparse.ArgumentParser(add_help=False)
    tower_options.add_argument("--p", type=int, default=2, help="Characteristic")
    tower_options.add_argument("--e", type=int, default=1, help="q0 = p^e")
    tower_options.add_argument("--m", type=int, default=2, help="Block length N = m")
    tower_options.add_argument("--s", type=int, default=None, help="q = q0^s")
    tower_options.add_argument("--ell", type=int, default=None, help="Number of blocks, defaults to q - 1")

    code_options = argparse.ArgumentParser(add_help=False)
    code_options.add_argument("--b", type=int, default=0)
    code_options.add_argument("--delta", type=int, default=None)
    code_options.add_argument("--code", default=None, help="Code JSON written by `construct`")
    code_options.add_argument("--budget", type=int, default=SUMRANK_BUDGET)

    output_options = argparse.ArgumentParser(add_help=False)
    output_options.add_argument("--output", default=None, help="Write here instead of stdout")

    subparsers.add_parser(Subcommand.tower.value, parents=[tower_options, output_options], help="Describe a tower")

    table = subparsers.add_parser(Subcommand.table.value, parents=[tower_options, output_options],
                                  help="Bound table as CSV")
    table.add_argument("--preset", choices=["appendix"], default=None)
    table.add_argument("--delta", type=int, action="append", default=[], dest="deltas")
    table.add_argument("--b", type=int, action="append", default=[], dest="bs")
    table.add_argument("--exact", action="store_true", help="Also construct every code for its exact dimension")
    table.add_argument("--jobs", type=int, default=SUMRANK_JOBS)

    subparsers.add_parser(Subcommand.construct.value, parents=[tower_options, code_options, output_options],
                          help="Build an SR-BCH code")
    encode = subparsers.add_parser(Subcommand.encode.value, parents=[tower_options, code_options, output_options],
                                   help="Encode a message over F")
    encode.add_argument("values", nargs="*", help="Message entries as base-p digit strings")
    decode_parser = subparsers.add_parser(Subcommand.decode.value,
                                          parents=[tower_options, code_options, output_options],
                                          help="Decode a received word")
    decode_parser.add_argument("values", nargs="*", help="Received entries as base-p digit strings")
    subparsers.add_parser(Subcommand.mindist.value, parents=[tower_options, code_options, output_options],
                          help="Exhaustive minimum sum-rank distance")
    verify = subparsers.add_parser(Subcommand.verify.value, parents=[tower_options, output_options],
                                   help="Run the algebraic property suite")
    verify.add_argument("--cases", type=int, default=200)
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--budget", type=int, default=None)
    return parser


def tower_params(args: argparse.Namespace) -> TowerParams:
    if args.s is None:
        raise SumRankError("--s is required.")
    ell = args.ell
    if ell is None:
        ell = (args.p ** args.e) ** args.s - 1
    return TowerParams(p=args.p, e=args.e, m=args.m, s=args.s, ell=ell)


def read_code_record(path: str) -> CodeRecord:
    try:
        with open(path, encoding="utf-8") as f:
            return CodeRecord.parse_obj(json.load(f))
    except OSError as e:
        raise InvalidCodeFile(f"Cannot read {path}: {e.strerror}.") from e
    except ValueError as e:
        raise InvalidCodeFile(f"{path} is not a code record: {e}") from e


def make_config(args: argparse.Namespace) -> CliConfig:
    code_path = getattr(args, "code", None)
    if code_path:
        record = read_code_record(code_path)
        params, deltas, bs = record.tower, [record.delta], [record.b]
    else:
        params = tower_params(args)
        if hasattr(args, "deltas"):
            deltas, bs = args.deltas, args.bs
        elif hasattr(args, "delta"):
            deltas, bs = ([args.delta] if args.delta else []), [args.b]
        else:
            deltas, bs = [], []
    return CliConfig(subcommand=args.subcommand, tower=params, deltas=deltas, bs=bs,
                     preset=getattr(args, "preset", None), exact=getattr(args, "exact", False),
                     budget=getattr(args, "budget", None) or SUMRANK_BUDGET, jobs=getattr(args, "jobs", SUMRANK_JOBS),
                     output=args.output, code=code_path, values=getattr(args, "values", []),
                     cases=getattr(args, "cases", 200), seed=getattr(args, "seed", 0))


def table_rows(config: CliConfig) -> List[Tuple[int, int]]:
    s = config.tower.s
    if config.preset == "appendix":
        return appendix_rows(s)
    bs = config.bs or APPENDIX_BS
    deltas = config.deltas
    if not deltas:
        deltas = APPENDIX_DELTAS.get(s, []) if config.tower == appendix_params(s) else []
        deltas = deltas or list(range(2, config.tower.n + 1))
    return [(delta, b) for delta in deltas for b in bs]


def selected_code(config: CliConfig) -> SRBCHCode:
    if not config.deltas:
        raise SumRankError("--delta or --code is required.")
    return build_code(config.tower, config.bs[0] if config.bs else 0, config.deltas[0])


def emit(text: str, output: Optional[str]):
    if output:
        with open(output, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def cmd_tower(config: CliConfig) -> str:
    return tower_info(tower_from_params(config.tower)).json() + "\n"


def cmd_table(config: CliConfig) -> str:
    if config.preset == "appendix" and config.tower != appendix_params(config.tower.s):
        raise SumRankError(f"The appendix preset needs the tower {appendix_params(config.tower.s)}.")
    rows = generate_table(config.tower, table_rows(config), exact=config.exact, jobs=config.jobs)
    buffer = io.StringIO()
    write_csv(rows, buffer)
    return buffer.getvalue()


def cmd_construct(config: CliConfig) -> str:
    return selected_code(config).to_record().json() + "\n"


def cmd_encode(config: CliConfig) -> str:
    code = selected_code(config)
    tower = code.tower
    codeword = code.encode(tower.parse_vector(config.values))
    return EncodeResult(codeword=tower.vector_text(codeword)).json() + "\n"


def cmd_decode(config: CliConfig) -> str:
    code = selected_code(config)
    result = decode(code, code.tower.parse_vector(config.values), budget=config.budget)
    return result.to_result(code.tower).json() + "\n"


def cmd_mindist(config: CliConfig) -> str:
    code = selected_code(config)
    params = config.tower
    distance = min_sum_rank_distance_bruteforce(code.tower, code.genmat, params.ell, params.m, Extension.small,
                                                config.budget, config.jobs)
    return MinDistResult(min_distance=distance, delta=code.delta, dimension=code.dimension).json() + "\n"


def cmd_verify(config: CliConfig) -> str:
    results = run_suite(tower_from_params(config.tower), cases=config.cases, seed=config.seed,
                        budget=min(config.budget, SUMRANK_MSRD_BUDGET))
    return "".join(result.json() + "\n" for result in results)


COMMANDS = {
    Subcommand.tower.value: cmd_tower,
    Subcommand.table.value: cmd_table,
    Subcommand.construct.value: cmd_construct,
    Subcommand.encode.value: cmd_encode,
    Subcommand.decode.value: cmd_decode,
    Subcommand.mindist.value: cmd_mindist,
    Subcommand.verify.value: cmd_verify,
}


def report_error(error: str, detail, exit_code: int) -> int:
    sys.stderr.write(json.dumps({"error": error, "detail": detail, "exit_code": exit_code}) + "\n")
    return exit_code


def main(argv: Optional[List[str]] = None) -> int:
    logging.basicConfig(stream=sys.stderr, level=SUMRANK_LOG_LEVEL,
                        format="%(asctime)s %(levelname)s %(name)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        config = make_config(args)
        text = COMMANDS[config.subcommand](config)
    except ValidationError as e:
        return report_error("ValidationError", e.errors(), VALIDATION_EXIT_CODE)
    except SumRankError as e:
        logger.debug(f"Command {args.subcommand} failed: {e.detail}")
        return report_error(e.__class__.__name__, e.detail, e.exit_code)
    try:
        emit(text, config.output)
    except OSError as e:
        detail = f"Cannot write {config.output}: {e.strerror}."
        return report_error(e.__class__.__name__, detail, VALIDATION_EXIT_CODE)
    return 0


if __name__ == "__main__":
    sys.exit(main())
