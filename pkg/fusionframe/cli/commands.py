import argparse
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from datetime import datetime
from pathlib import Path
from typing import Dict, List, Optional, Tuple

import psutil
from pydantic import ValidationError
from tqdm import tqdm

from fusionframe import __version__
from fusionframe.admissibility import majorizes, tff_necessary_check
from fusionframe.config.settings import settings
from fusionframe.core import (
    ClusteringAmbiguityError, DivergenceError, FrameConfig, FusionFrameError, OperatorFrame, ScalarField,
    SpectralData, StructuralError, block_spectra, check_spectral_membership, ffp, frame_operator,
    is_fusion_frame, is_tight, random_fusion_frame, spectrum, welch_bound
)
from fusionframe.flow import DescentSettings, DescentTrace, classify_critical_point, descend
from fusionframe.git import check_property_S, instability_certificate
from fusionframe.io import (
    AdmissibilityReport, CertificateReport, ReproductionSummary, RunManifest, RunSummary, SpectraReport,
    TightnessReport, certificate_to_model, critical_to_model, property_s_to_model, read_frame, write_frame,
    write_json, write_trace_csv
)
from .experiment import expand_seeds, limiting_geometry, load_preset

logger = logging.getLogger(__name__)

# 종료 코드
EXIT_OK = 0
EXIT_INPUT_ERROR = 2
EXIT_MAX_ITERS = 3
EXIT_DIVERGED = 4

class InputError(FusionFrameError):
    """잘못된 CLI 입력 (종료 코드 2)"""

def parse_ints(text: Optional[str]) -> Optional[Tuple[int, ...]]:
    if text is None:
        return None
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise InputError(f"expected comma separated integers, got {text!r}")

def parse_floats(text: Optional[str]) -> Optional[Tuple[float, ...]]:
    if text is None:
        return None
    try:
        return tuple(float(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise InputError(f"expected comma separated numbers, got {text!r}")

def parse_block_spectra(text: Optional[str]) -> Optional[Tuple[Tuple[float, ...], ...]]:
    """'1,1;1' -> ((1, 1), (1,)); 세미콜론 없이 주면 block 당 한 값"""
    if text is None:
        return None
    if ";" in text:
        return tuple(parse_floats(group) for group in text.split(";"))
    return tuple((v,) for v in parse_floats(text))

def config_from_args(args: argparse.Namespace) -> FrameConfig:
    if args.d is None or args.ranks is None:
        raise InputError("--d and --ranks are required")
    try:
        return FrameConfig(field=ScalarField(args.field), d=args.d, ranks=parse_ints(args.ranks))
    except (ValidationError, ValueError) as e:
        raise InputError(f"invalid frame parameters: {e}")

def load_or_generate(args: argparse.Namespace) -> OperatorFrame:
    if getattr(args, "in_path", None):
        try:
            return read_frame(args.in_path)
        except StructuralError as e:
            raise InputError(str(e))
    config = config_from_args(args)
    return random_fusion_frame(config, args.seed)

def descent_options(args: argparse.Namespace, defaults: Optional[Dict] = None) -> DescentSettings:
    """명령행 값이 defaults 보다 우선"""
    values = dict(defaults or {})
    if getattr(args, "step", None) is not None:
        values["step_size"] = args.step
    if getattr(args, "max_iters", None) is not None:
        values["max_iters"] = args.max_iters
    if getattr(args, "grad_tol", None) is not None:
        values["grad_tol"] = args.grad_tol
    try:
        return DescentSettings(**values)
    except ValidationError as e:
        raise InputError(f"invalid descent settings: {e}")

def _manifest_path(out: Path) -> Path:
    return out.with_name(out.stem + ".manifest.json")

def write_manifest(command: str, args: argparse.Namespace, started: float, outputs: List[Path],
                   path: Path, exit_code: int, seed: Optional[int] = None) -> Path:
    params = {k: v for k, v in vars(args).items() if k not in ("handler",)}
    manifest = RunManifest(
        command=command,
        parameters=params,
        seed=seed,
        version=__version__,
        started_at=datetime.fromtimestamp(started),
        duration_seconds=time.time() - started,
        outputs=[str(p) for p in outputs],
        exit_code=exit_code,
    )
    return write_json(manifest, path)

def _print_frame_summary(frame: OperatorFrame):
    value = ffp(frame)
    bound = welch_bound(frame.config)
    tight = is_tight(frame)
    print(f"FFP          : {value:.12g}")
    print(f"Welch bound  : {bound:.12g} (gap {value - bound:.3e})")
    print(f"tight        : {'✅ yes' if tight else '❌ no'}")

def cmd_generate(args: argparse.Namespace) -> int:
    """무작위 fusion frame 을 생성하여 JSON 으로 저장"""
    started = time.time()
    config = config_from_args(args)
    if config.n < config.d:
        raise InputError(f"n={config.n} < d={config.d}: blocks cannot span K^d, no fusion frame exists")
    frame = random_fusion_frame(config, args.seed)
    out = Path(args.out or f"frame_d{config.d}_seed{args.seed}.json")
    write_frame(frame, out)
    logger.info(f"frame 생성 완료: {out}")
    print(f"📄 frame: {out}")
    _print_frame_summary(frame)
    write_manifest("generate", args, started, [out], _manifest_path(out), EXIT_OK, args.seed)
    return EXIT_OK

def cmd_tighten(args: argparse.Namespace) -> int:
    """경사 하강으로 frame 을 tight 에 가깝게"""
    started = time.time()
    frame = load_or_generate(args)
    if not is_fusion_frame(frame):
        raise InputError("input is not a fusion frame (rows must be orthonormal and S positive definite)")
    options = descent_options(args)
    out = Path(args.out or "tightened.json")
    trace_path = Path(args.trace) if args.trace else out.with_name(out.stem + ".trace.csv")

    try:
        trace = descend(frame, options)
    except DivergenceError as e:
        outputs = []
        if e.trace is not None:
            outputs.append(write_trace_csv(e.trace, trace_path))
        print(f"❌ divergence: {e}")
        write_manifest("tighten", args, started, outputs, _manifest_path(out), EXIT_DIVERGED, args.seed)
        return EXIT_DIVERGED

    write_trace_csv(trace, trace_path)
    write_frame(trace.final_frame, out)
    print(f"📄 frame: {out}")
    print(f"📈 trace: {trace_path} ({len(trace.records)} records)")
    _print_frame_summary(trace.final_frame)
    print(f"converged    : {trace.converged} after {trace.iterations} iterations")

    code = EXIT_OK if trace.converged else EXIT_MAX_ITERS
    write_manifest("tighten", args, started, [out, trace_path], _manifest_path(out), code, args.seed)
    return code

def _check_report(frame: OperatorFrame, args: argparse.Namespace):
    which = args.which
    if which == "tight":
        value = ffp(frame)
        bound = welch_bound(frame.config)
        return TightnessReport(ffp=value, welch_bound=bound, gap=value - bound,
                               is_tight=is_tight(frame), is_fusion_frame=is_fusion_frame(frame))
    if which == "critical":
        return critical_to_model(classify_critical_point(frame))
    if which == "property-s":
        return property_s_to_model(check_property_S(frame))
    if which == "certificate":
        report = classify_critical_point(frame)
        base = dict(is_critical=report.is_critical, is_tight=report.is_tight,
                    ffp=ffp(frame), welch_bound=welch_bound(frame.config))
        if not report.is_critical:
            return CertificateReport(**base, note="frame is not a critical point of FFP")
        try:
            cert = instability_certificate(frame)
        except ClusteringAmbiguityError as e:
            return CertificateReport(**base, note=str(e))
        note = "tight: no destabilizing subgroup" if report.is_tight else ""
        if cert is None and not report.is_tight:
            note = "no positive weight exponent found"
        return CertificateReport(**base, certificate=certificate_to_model(cert), note=note)
    if which == "spectra":
        lam = parse_floats(args.lambda_)
        r = parse_block_spectra(args.r)
        match = None
        if lam is not None or r is not None:
            try:
                target = SpectralData(r=r, lambda_=lam)
                match = check_spectral_membership(frame, target)
            except (ValidationError, StructuralError) as e:
                raise InputError(f"invalid spectral target: {e}")
        return SpectraReport(
            frame_spectrum=[float(v) for v in spectrum(frame_operator(frame))],
            block_spectra=[[float(v) for v in vals] for vals in block_spectra(frame)],
            target_lambda=list(lam) if lam is not None else None,
            target_r=[list(x) for x in r] if r is not None else None,
            match=match,
        )
    raise InputError(f"unknown check {which!r}")

def cmd_check(args: argparse.Namespace) -> int:
    """frame 파일에 대한 판정을 JSON 으로 출력 (판정 결과와 무관하게 0)"""
    started = time.time()
    if not args.in_path:
        raise InputError("--in is required")
    try:
        frame = read_frame(args.in_path)
    except StructuralError as e:
        raise InputError(str(e))
    report = _check_report(frame, args)
    text = report.model_dump_json(indent=2)
    print(text)
    if args.out:
        out = write_json(report, args.out)
        write_manifest("check", args, started, [out], _manifest_path(out), EXIT_OK)
    return EXIT_OK

def cmd_admissible(args: argparse.Namespace) -> int:
    """majorization (--lambda/--r) 또는 TFF 존재 판정 (--d/--ranks)"""
    lam = parse_floats(args.lambda_)
    r = parse_floats(args.r)
    if lam is not None or r is not None:
        if lam is None or r is None:
            raise InputError("--lambda and --r must be given together")
        try:
            result = majorizes(lam, r)
        except StructuralError as e:
            raise InputError(str(e))
        report = AdmissibilityReport(kind="majorization", result=result,
                                     note="lambda majorizes r" if result else "lambda does not majorize r")
    else:
        check = tff_necessary_check(config_from_args(args))
        report = AdmissibilityReport(kind="tight-fusion-frame", trace_value=check.trace_value,
                                     verdict=check.verdict.value, note=check.note)
    print(report.model_dump_json(indent=2))
    if args.out:
        write_json(report, args.out)
    return EXIT_OK

def _run_seed(index: int, seed: int, config: FrameConfig, options: DescentSettings, preset: Dict,
              out_dir: Path) -> RunSummary:
    trace_path = out_dir / f"run_{index:03d}_seed{seed}.csv"
    target, target_tol = preset['target_ffp'], preset['target_tol']
    bound = welch_bound(config)
    try:
        trace: DescentTrace = descend(random_fusion_frame(config, seed), options)
    except DivergenceError as e:
        partial = e.trace
        if partial is not None:
            write_trace_csv(partial, trace_path)
        return RunSummary(seed=seed, converged=False, iterations=partial.iterations if partial else 0,
                          final_ffp=partial.final_ffp if partial else float("nan"), reached_target=False,
                          above_bound=False, trace_path=trace_path.name, error=str(e))
    write_trace_csv(trace, trace_path)

    final = trace.final_ffp
    reached = abs(final - target) <= target_tol
    summary = dict(seed=seed, converged=trace.converged, iterations=trace.iterations, final_ffp=final,
                   reached_target=reached, above_bound=final > bound, trace_path=trace_path.name)
    if trace.converged:
        try:
            geometry = limiting_geometry(trace.final_frame, preset['angle_tol'])
            summary.update(dihedral_angle=geometry.dihedral_angle,
                           pairwise_angles=list(geometry.pairwise_angles), geometry_ok=geometry.ok)
        except StructuralError as e:
            summary.update(geometry_ok=False, error=str(e))
    return RunSummary(**summary)

def _worker_count() -> int:
    return settings.THREADS or psutil.cpu_count(logical=False) or 1

def cmd_reproduce_fig(args: argparse.Namespace) -> int:
    """두 직선과 한 평면 실험을 여러 seed 로 재현"""
    started = time.time()
    preset = load_preset(config_path=args.preset)
    count = args.seeds if args.seeds is not None else preset['seeds']
    master = args.seed if args.seed is not None else preset['master_seed']
    if count < 1:
        raise InputError("--seeds must be positive")
    try:
        config = FrameConfig(field=ScalarField(preset['field']), d=preset['d'], ranks=tuple(preset['ranks']))
    except (ValidationError, ValueError) as e:
        raise InputError(f"invalid preset: {e}")
    options = descent_options(args, defaults={
        "step_size": preset['step'], "max_iters": preset['max_iters'], "grad_tol": preset['grad_tol'],
    })

    out_dir = Path(args.out or "reproduction")
    out_dir.mkdir(parents=True, exist_ok=True)
    seeds = expand_seeds(master, count)
    workers = min(_worker_count(), count)
    logger.info(f"재현 실험 시작: seeds={count}, master={master}, workers={workers}")

    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(_run_seed, i, s, config, options, preset, out_dir) for i, s in enumerate(seeds)]
        runs = [f.result() for f in tqdm(futures, desc="seeds", disable=not args.progress)]

    reached = sum(r.reached_target for r in runs)
    geometry_ok = sum(bool(r.geometry_ok) for r in runs)
    summary = ReproductionSummary(
        d=config.d, ranks=list(config.ranks), field=config.field,
        target_ffp=preset['target_ffp'], target_tol=preset['target_tol'],
        welch_bound=welch_bound(config), angle_tol=preset['angle_tol'],
        master_seed=master, seeds=seeds, runs=runs,
        fraction_reaching_target=reached / count, fraction_geometry_ok=geometry_ok / count,
    )
    summary_path = write_json(summary, out_dir / "summary.json")
    print(f"🎯 {reached}/{count} runs reached FFP = {preset['target_ffp']} ± {preset['target_tol']}")
    print(f"📐 {geometry_ok}/{count} runs show the right-angle Mercedes-Benz geometry")
    print(f"📄 summary: {summary_path}")

    outputs = [summary_path] + [out_dir / r.trace_path for r in runs]
    write_manifest("reproduce", args, started, outputs, out_dir / "manifest.json", EXIT_OK, master)
    return EXIT_OK
