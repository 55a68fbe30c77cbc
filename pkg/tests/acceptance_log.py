"""Per-criterion outcomes collected by test_acceptance.py."""

RESULTS: dict[int, tuple[bool, str]] = {}


def record(k: int, ok: bool, detail: str) -> None:
    RESULTS[k] = (ok, detail)


def line(k: int) -> str:
    ok, detail = RESULTS[k]
    return f"{'PASS' if ok else 'FAIL'} criterion {k}: {detail}"
