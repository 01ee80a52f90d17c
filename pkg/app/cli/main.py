import argparse
import json
import logging
import sys
from typing import List, Optional

from pydantic import ValidationError

from app.application.services.bias.bias import BiasApplicationService
from app.application.services.debias.debias import DebiasApplicationService
from app.application.services.evaluation.evaluation import EvaluationApplicationService
from app.application.services.mean.mean import MeanApplicationService
from app.core.config import base_settings, data_setting, evaluation_setting, mean_setting, pgd_setting
from app.core.enums.optimizer import OptimizerEnum, MomentumTransportEnum, GradientModeEnum
from app.core.enums.similarity import SimilarityEnum, SemBiasScorerEnum
from app.core.enums.space import EmbeddingSpaceEnum, EmbeddingFormatEnum
from app.core.errors.exceptions import DebiasException, InvalidConfigException
from app.domain.debias.schemas.pgd import PgdConfig
from app.domain.embedding.schemas.embedding_set import EmbeddingSet
from app.domain.optimization.schemas.intrinsic_mean import MeanConfig
from app.infrastructure.repositories.benchmark.benchmark import get_benchmark_repository
from app.infrastructure.repositories.embedding.embedding import EmbeddingRepository, get_embedding_repository
from app.infrastructure.repositories.report.report import ReportRepository, build_report, get_report_repository
from app.infrastructure.repositories.word_list.word_list import get_word_list_repository
from app.infrastructure.task.worker_pool import WorkerPool

logger = logging.getLogger(__name__)


def _enum_values(enum_cls) -> List[str]:
    return [e.value for e in enum_cls]


def _unit_interval(value: str) -> float:
    t = float(value)
    if not 0.0 <= t <= 1.0:
        raise argparse.ArgumentTypeError(f"{value} is outside [0, 1]")
    return t


def _positive_float(value: str) -> float:
    x = float(value)
    if not x > 0:
        raise argparse.ArgumentTypeError(f"{value} must be positive")
    return x


def _positive_int(value: str) -> int:
    n = int(value)
    if n < 1:
        raise argparse.ArgumentTypeError(f"{value} must be >= 1")
    return n


def _non_negative_int(value: str) -> int:
    n = int(value)
    if n < 0:
        raise argparse.ArgumentTypeError(f"{value} must be >= 0")
    return n


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=evaluation_setting.WEAT_SEED)
    common.add_argument("--threads", type=_positive_int, default=None, help="default: available CPUs")
    common.add_argument("--similarity", choices=_enum_values(SimilarityEnum), default=None)
    common.add_argument("--space", choices=_enum_values(EmbeddingSpaceEnum), default=EmbeddingSpaceEnum.POINCARE.value)
    common.add_argument("--format", choices=_enum_values(EmbeddingFormatEnum), default=None,
                        help="embedding file format (default: by extension, .bin = binary)")
    common.add_argument("--output", default=None, help="report path (default: stdout)")
    verbosity = common.add_mutually_exclusive_group()
    verbosity.add_argument("--verbose", action="store_true")
    verbosity.add_argument("--quiet", action="store_true")
    return common


def _mean_options(parser: argparse.ArgumentParser, prefix: str = "") -> None:
    parser.add_argument(f"--{prefix}lr", dest="mean_lr", type=_positive_float, default=mean_setting.LEARNING_RATE)
    parser.add_argument(f"--{prefix}epochs", dest="mean_epochs", type=_non_negative_int,
                        default=mean_setting.MAX_EPOCHS)
    parser.add_argument(f"--{prefix}optimizer", dest="mean_optimizer", choices=_enum_values(OptimizerEnum),
                        default=OptimizerEnum.RADAM.value)


def _gender_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--male-words", default=data_setting.MALE_WORDS_PATH)
    parser.add_argument("--female-words", default=data_setting.FEMALE_WORDS_PATH)
    parser.add_argument("--gender-specific", default=data_setting.GENDER_SPECIFIC_PATH)


def build_parser() -> argparse.ArgumentParser:
    common = _common_parser()
    parser = argparse.ArgumentParser(prog=base_settings.PROJECT_NAME,
                                     description="Gender bias measurement and debiasing in the Poincare ball")
    commands = parser.add_subparsers(dest="command", required=True)

    mean = commands.add_parser("mean", parents=[common], help="intrinsic mean of a word list")
    mean.add_argument("--embeddings", required=True)
    mean.add_argument("--words", required=True)
    _mean_options(mean)

    bias = commands.add_parser("bias", parents=[common], help="gyrocosine bias report")
    bias.add_argument("--embeddings", required=True)
    _gender_options(bias)
    targets = bias.add_mutually_exclusive_group()
    targets.add_argument("--target-words", default=None, help="default: the whole gender-neutral vocabulary")
    targets.add_argument("--professions", action="store_true",
                         help=f"score the shipped profession list ({data_setting.PROFESSIONS_PATH})")
    bias.add_argument("--euclidean-embeddings", default=None)
    bias.add_argument("--absolute-direct-bias", action="store_true")
    bias.add_argument("--threshold", type=float, default=pgd_setting.BIAS_THRESHOLD)
    bias.add_argument("--report-format", choices=["json", "tsv"], default="json")
    _mean_options(bias, prefix="mean-")

    debias = commands.add_parser("debias", parents=[common], help="Poincare gender debias")
    debias.add_argument("--embeddings", required=True)
    _gender_options(debias)
    debias.add_argument("--lambda1", type=float, default=pgd_setting.LAMBDA1)
    debias.add_argument("--lambda2", type=float, default=pgd_setting.LAMBDA2)
    debias.add_argument("--lr", type=_positive_float, default=pgd_setting.LEARNING_RATE)
    debias.add_argument("--epochs", type=_non_negative_int, default=pgd_setting.EPOCHS)
    debias.add_argument("--gradient", choices=_enum_values(GradientModeEnum), default=GradientModeEnum.ANALYTIC.value)
    debias.add_argument("--transport", choices=_enum_values(MomentumTransportEnum),
                        default=MomentumTransportEnum.PARALLEL.value)
    debias.add_argument("--out", required=True, help="debiased embedding file")
    debias.add_argument("--progress", action="store_true")
    _mean_options(debias, prefix="mean-")

    evaluate = commands.add_parser("eval", help="evaluation suite")
    suites = evaluate.add_subparsers(dest="suite", required=True)

    weat = suites.add_parser("weat", parents=[common])
    weat.add_argument("--embeddings", required=True)
    weat.add_argument("--spec", action="append", default=[], help="WEAT spec JSON (repeatable)")
    weat.add_argument("--max-permutations", type=_positive_int, default=evaluation_setting.WEAT_MAX_PERMUTATIONS)

    sembias = suites.add_parser("sembias", parents=[common])
    sembias.add_argument("--embeddings", required=True)
    sembias.add_argument("--dataset", required=True)
    sembias.add_argument("--t", type=_unit_interval, default=evaluation_setting.DEFAULT_T)
    sembias.add_argument("--cv-t", default=None, help="gender-definition analogies used to select t")
    sembias.add_argument("--sembias-scorer", choices=_enum_values(SemBiasScorerEnum),
                         default=SemBiasScorerEnum.ANALOGY.value)

    similarity = suites.add_parser("similarity", parents=[common])
    similarity.add_argument("--embeddings", required=True)
    similarity.add_argument("--dataset", action="append", required=True, help="word1<TAB>word2<TAB>score (repeatable)")

    analogy = suites.add_parser("analogy", parents=[common])
    analogy.add_argument("--embeddings", required=True)
    analogy.add_argument("--dataset", default=None)
    analogy.add_argument("--t", type=_unit_interval, default=evaluation_setting.DEFAULT_T)
    analogy.add_argument("--cv-t", default=None, help="gender-definition analogies used to select t")
    return parser


def _configure_logging(args: argparse.Namespace) -> None:
    root = logging.getLogger()
    if args.verbose:
        root.setLevel(logging.DEBUG)
    elif args.quiet:
        root.setLevel(logging.WARNING)


def _similarity(args: argparse.Namespace, default: SimilarityEnum) -> SimilarityEnum:
    return SimilarityEnum(args.similarity) if args.similarity else default


def _format(args: argparse.Namespace) -> Optional[EmbeddingFormatEnum]:
    return EmbeddingFormatEnum(args.format) if args.format else None


def _mean_config(args: argparse.Namespace) -> MeanConfig:
    return MeanConfig(
        learning_rate=args.mean_lr,
        max_epochs=args.mean_epochs,
        optimizer=OptimizerEnum(args.mean_optimizer),
    )


class Cli:
    def __init__(
            self,
            embedding_repo: EmbeddingRepository,
            report_repo: ReportRepository,
    ):
        self.embedding_repo = embedding_repo
        self.report_repo = report_repo
        self.word_list_repo = get_word_list_repository()

    def _load(self, args: argparse.Namespace, path: Optional[str] = None,
              space: Optional[EmbeddingSpaceEnum] = None) -> EmbeddingSet:
        return self.embedding_repo.load(path or args.embeddings, space or EmbeddingSpaceEnum(args.space),
                                        _format(args))

    def _emit(self, args: argparse.Namespace, command: str, result) -> None:
        self.report_repo.write_json(build_report(command, result), args.output)

    def cmd_mean(self, args: argparse.Namespace) -> None:
        cfg = _mean_config(args)
        service = MeanApplicationService(word_list_repo=self.word_list_repo)
        self._emit(args, "mean", service.intrinsic_mean(self._load(args), args.words, cfg))

    def cmd_bias(self, args: argparse.Namespace) -> None:
        cfg = _mean_config(args)
        service = BiasApplicationService(word_list_repo=self.word_list_repo)
        male, female = service.load_gender_words(args.male_words, args.female_words)
        target_path = data_setting.PROFESSIONS_PATH if args.professions else args.target_words
        targets = self.word_list_repo.load_word_list(target_path) if target_path else None
        specific = service.load_specific_words(args.gender_specific)
        euclidean = (self._load(args, args.euclidean_embeddings, EmbeddingSpaceEnum.EUCLIDEAN)
                     if args.euclidean_embeddings else None)

        report = service.bias_report(
            self._load(args), male, female,
            target_words=targets,
            specific_words=specific,
            euclidean_emb=euclidean,
            absolute_direct_bias=args.absolute_direct_bias,
            cfg=cfg,
            threshold=args.threshold,
        )
        if args.report_format == "tsv":
            columns = ["gamma"] + (["direct_bias"] if report.direct_bias is not None else [])
            rows = {
                w: [g] + ([report.direct_bias.get(w)] if report.direct_bias is not None else [])
                for w, g in report.gamma.items()
            }
            self.report_repo.write_tsv(rows, columns, args.output)
        else:
            self._emit(args, "bias", report)

    def cmd_debias(self, args: argparse.Namespace) -> None:
        cfg = PgdConfig(
            lambda1=args.lambda1,
            lambda2=args.lambda2,
            learning_rate=args.lr,
            epochs=args.epochs,
            gradient=GradientModeEnum(args.gradient),
            transport=MomentumTransportEnum(args.transport),
        )
        mean_cfg = _mean_config(args)
        bias_service = BiasApplicationService(word_list_repo=self.word_list_repo)
        male, female = bias_service.load_gender_words(args.male_words, args.female_words)
        specific = [*bias_service.load_specific_words(args.gender_specific), *male, *female]

        emb = self._load(args)
        gv = bias_service.gender_gyrovectors(emb, male, female, mean_cfg)
        service = DebiasApplicationService(worker_pool=WorkerPool(threads=args.threads, progress=args.progress))
        result, report = service.debias_vocabulary(emb, gv, specific, cfg)
        self.embedding_repo.save(result.embeddings, args.out, _format(args))
        self._emit(args, "debias", report)

    def _evaluation_service(self) -> EvaluationApplicationService:
        return EvaluationApplicationService(benchmark_repo=get_benchmark_repository())

    def cmd_eval_weat(self, args: argparse.Namespace) -> None:
        metric = _similarity(args, SimilarityEnum.NEG_POINCARE)
        report = self._evaluation_service().weat(self._load(args), args.spec, metric, args.max_permutations, args.seed)
        self._emit(args, "eval weat", report)

    def cmd_eval_sembias(self, args: argparse.Namespace) -> None:
        metric = _similarity(args, SimilarityEnum.NEG_POINCARE)
        service = self._evaluation_service()
        emb = self._load(args)
        t = args.t
        if args.cv_t:
            t = service.cross_validate_t(emb, args.cv_t, metric).result.t
        result = service.sembias(emb, args.dataset, t, metric, SemBiasScorerEnum(args.sembias_scorer))
        self._emit(args, "eval sembias", {"t": t, "similarity": metric.value, **result.model_dump()})

    def cmd_eval_similarity(self, args: argparse.Namespace) -> None:
        metric = _similarity(args, SimilarityEnum.NEG_POINCARE)
        self._emit(args, "eval similarity", self._evaluation_service().similarity(self._load(args), args.dataset, metric))

    def cmd_eval_analogy(self, args: argparse.Namespace) -> None:
        if not args.dataset and not args.cv_t:
            raise InvalidConfigException("eval analogy needs --dataset, --cv-t or both")
        metric = _similarity(args, SimilarityEnum.COSINE)
        service = self._evaluation_service()
        emb = self._load(args)
        if args.dataset:
            report = service.analogy(emb, args.dataset, args.t, metric, args.cv_t)
        else:
            report = service.cross_validate_t(emb, args.cv_t, metric)
        if report.cross_validated:
            print(f"selected t = {report.result.t}", file=sys.stderr)
        self._emit(args, "eval analogy", report)


def main(argv: Optional[List[str]] = None) -> int:
    """
    CLI 진입점.

    Returns:
        int: 0 성공, 1 실행 중 에러, 2 인자 오류
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    _configure_logging(args)

    cli = Cli(embedding_repo=get_embedding_repository(), report_repo=get_report_repository())
    command = args.command if args.command != "eval" else f"eval_{args.suite}"
    handler = getattr(cli, f"cmd_{command}")
    try:
        handler(args)
    except DebiasException as e:
        print(str(e), file=sys.stderr)
        return 1
    except ValidationError as e:
        print(json.dumps({"message": "Invalid configuration", "context": str(e)}), file=sys.stderr)
        return 1
    except OSError as e:
        print(json.dumps({"message": "I/O error", "context": str(e)}), file=sys.stderr)
        return 1
    return 0
