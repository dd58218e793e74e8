import time

import pytest
from hypothesis import HealthCheck, settings

from tagbench import KERNEL_NAMES, PRESETS, Runtime, SimHeap, default_spec, run_matrix
from tagbench import kernels as kernels_mod
from tagbench.bench import checksum_hex
from tagbench.profiler import FloatProfile

settings.register_profile(
    "suite", deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def matrix_result():
    """Full kernel x scheme matrix, one rep, small ballast preload.

    Shared by the allocation, checksum, and flip tests so the expensive
    run happens once per session. Wall time is captured for the budget
    assertions."""
    specs = [default_spec(name) for name in KERNEL_NAMES]
    t0 = time.perf_counter()
    records = run_matrix(specs, list(PRESETS), reps=1, preload_bytes=80000)
    wall = time.perf_counter() - t0
    bad = [r for r in records if r.error is not None]
    assert not bad, "matrix cells failed: %r" % (bad,)
    by = {(r.kernel, r.scheme): r for r in records}
    return {"records": records, "by": by, "wall": wall}


@pytest.fixture(scope="session")
def profiles():
    """Per-kernel float-stream profiles captured through the box hook,
    plus the checksum of the run that produced each profile."""
    out = {}
    t0 = time.perf_counter()
    for name in KERNEL_NAMES:
        prof = FloatProfile(name)
        rt = Runtime(PRESETS["nanbox"], SimHeap(), profile_hook=prof.add)
        word = kernels_mod.run(default_spec(name), rt)
        out[name] = {"profile": prof, "checksum_hex": checksum_hex(rt, word)}
    wall = time.perf_counter() - t0
    return {"kernels": out, "wall": wall}
