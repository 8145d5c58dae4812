"""Plain-vs-EDIZ comparison against a ground-truth image.

The low-resolution input is synthesized by decimating the ground truth, then
zoomed back both ways.  Both outputs are scored against the ground truth
after 8-bit quantization, i.e. exactly as they are written to disk.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path

from . import io, kernels, resample
from .ediz import PAD_REPLICATE, STRICT, EdizConfig, ediz_zoom
from .metrics import QualityReport, delta, quality_report
from .raster import Raster, ShapeError, crop, pad_to_multiple, subtract

HEADLINE = ("mse", "psnr", "ssim", "hf_energy")


@dataclass
class CompareReport:
    config: dict
    plain: dict
    ediz: dict
    artifacts: list[str] = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    @property
    def delta(self) -> dict:
        return {k: delta(self.ediz[k], self.plain[k]) for k in HEADLINE}

    def to_dict(self) -> dict:
        return {
            "config": self.config,
            "plain": self.plain,
            "ediz": self.ediz,
            "delta": self.delta,
            "artifacts": list(self.artifacts),
            "notes": self.notes,
        }

    def to_json(self) -> str:
        return json.dumps(_encode_inf(self.to_dict()), indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "CompareReport":
        d = _decode_inf(json.loads(text))
        return cls(d["config"], d["plain"], d["ediz"], d.get("artifacts", []), d.get("notes", {}))

    def to_text(self) -> str:
        lines = [f"{k} = {v}" for k, v in sorted(self.config.items())]
        for section in ("plain", "ediz", "delta"):
            values = getattr(self, section)
            for k in HEADLINE:
                lines.append(f"{section}.{k} = {_fmt(values[k])}")
        for k, v in sorted(self.notes.items()):
            lines.append(f"{k} = {v}")
        for p in self.artifacts:
            lines.append(f"artifact = {p}")
        return "\n".join(lines) + "\n"


def _fmt(v: float) -> str:
    return "inf" if math.isinf(v) else f"{v:.6g}"


def _encode_inf(obj):
    # strict JSON has no infinity; use the string sentinel "inf"
    if isinstance(obj, dict):
        return {k: _encode_inf(v) for k, v in obj.items()}
    if isinstance(obj, list):
        return [_encode_inf(v) for v in obj]
    if isinstance(obj, float) and math.isinf(obj):
        return "inf" if obj > 0 else "-inf"
    return obj


def _decode_inf(obj):
    if isinstance(obj, dict):
        return {k: _decode_inf(v) for k, v in obj.items()}
    if isinstance(obj, list):
        return [_decode_inf(v) for v in obj]
    if obj in ("inf", "-inf"):
        return float(obj)
    return obj


def _summary(report: QualityReport) -> dict:
    d = report.luma.as_dict()
    d["channels"] = [c.as_dict() for c in report.channels]
    return d


def quantized(img: Raster) -> Raster:
    """The raster that would be read back after saving ``img``."""
    return Raster(io.quantize(img) / 255.0)


@dataclass
class CompareResult:
    report: CompareReport
    lr: Raster
    plain: Raster
    ediz: Raster
    estimated_error: Raster


def compare(
    gt: Raster,
    factor: int,
    kernel: kernels.Kernel,
    gain: float = 1.0,
    pad: bool = False,
    outdir=None,
    write_json: bool = True,
) -> CompareResult:
    """Score plain and EDIZ zooms of the decimated ``gt``.

    Without ``pad`` the ground truth must be divisible by ``factor**2``
    (EDIZ decimates the low-resolution input once more).  When ``outdir``
    is given, images and ``report.txt`` are written there, plus
    ``report.json`` if ``write_json``.
    """
    n = factor
    if not pad:
        for axis, size in (("width", gt.width), ("height", gt.height)):
            if size % (n * n):
                raise ShapeError(
                    f"ground-truth {axis} {size} must be divisible by factor^2 = {n * n} "
                    "(the LR input is decimated again by EDIZ); pass --pad to pad by edge replication"
                )
    work = pad_to_multiple(gt, n) if pad else gt
    lr = resample.subsample(work, n)
    cfg = EdizConfig(n, kernel, gain, PAD_REPLICATE if pad else STRICT)
    trace = ediz_zoom(lr, cfg)
    plain_out = crop(trace.i_in_zoom, gt.width, gt.height)
    ediz_out = crop(trace.i_out, gt.width, gt.height)

    plain_q, ediz_q = quantized(plain_out), quantized(ediz_out)
    report = CompareReport(
        config={"kernel": kernel.name, "factor": n, "gain": gain, "pad": pad},
        plain=_summary(quality_report(plain_q, gt)),
        ediz=_summary(quality_report(ediz_q, gt)),
    )
    result = CompareResult(report, lr, plain_out, ediz_out, trace.estimated_error)
    if outdir is not None:
        _write_artifacts(result, gt, Path(outdir), write_json)
    return result


def _write_artifacts(result: CompareResult, gt: Raster, outdir: Path, write_json: bool) -> None:
    outdir.mkdir(parents=True, exist_ok=True)
    ext = ".ppm" if gt.channels == 3 else ".pgm"
    report = result.report
    paths = []

    def emit(name, img, **kw):
        path = outdir / (name + ext)
        scale = io.save(img, path, **kw)
        paths.append(str(path))
        return scale

    emit("lr", result.lr)
    emit("plain", result.plain)
    emit("ediz", result.ediz)
    report.notes["error_map_scale"] = emit("error_map", result.estimated_error, visualize=True)
    diff_plain = subtract(quantized(result.plain), gt)
    diff_ediz = subtract(quantized(result.ediz), gt)
    # one shared scale so the two difference images are directly comparable
    m = max(float(abs(diff_plain.data).max()), float(abs(diff_ediz.data).max())) or 1.0
    for name, d in (("diff_plain", diff_plain), ("diff_ediz", diff_ediz)):
        vis, _ = io.visualize_signed(d, m)
        emit(name, vis)
    report.notes["diff_scale"] = m
    report.notes["peak"] = 1.0
    paths.append(str(outdir / "report.txt"))
    if write_json:
        paths.append(str(outdir / "report.json"))
    report.artifacts = paths
    (outdir / "report.txt").write_text(report.to_text())
    if write_json:
        (outdir / "report.json").write_text(report.to_json())
