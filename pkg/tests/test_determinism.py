"""Thread-count independence below the CLI; the byte-level corpus comparison is acceptance criterion 10."""

from alia.certify import certify
from alia.cli import main
from alia.core import LawId, Residual, parallel_map

from cli_corpus import CORPUS


def test_corpus_exercises_every_exit_code(monkeypatch, capsys):
    monkeypatch.setenv("ALIA_THREADS", "1")
    codes = {main(argv) for argv in CORPUS}
    capsys.readouterr()
    assert codes == {0, 1, 2}


def test_parallel_map_keeps_order(monkeypatch):
    monkeypatch.setenv("ALIA_THREADS", "8")
    assert parallel_map(lambda x: x * x, range(50)) == [x * x for x in range(50)]


def test_bad_thread_setting_falls_back_to_serial(monkeypatch):
    monkeypatch.setenv("ALIA_THREADS", "many")
    assert parallel_map(str, [1, 2]) == ["1", "2"]


def test_certification_runs_in_grid_order(monkeypatch):
    def evaluate(b):
        return Residual(LawId.COMMUTATIVE)

    runs = {}
    for threads in ("1", "8"):
        monkeypatch.setenv("ALIA_THREADS", threads)
        runs[threads] = certify(evaluate, ["a", "b"], "commutative").runs
    assert runs["1"] == runs["8"]
    assert [dict(r.binding)["b"] for r in runs["8"][:5]] == [0, 1, 2, 3, 5]
