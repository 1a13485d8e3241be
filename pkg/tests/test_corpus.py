import json
import shutil

from hcmaj.corpus import default_corpus_dir, run_corpus


def test_corpus_reproduces():
    report = run_corpus()
    assert [r.mismatches for r in report.results] == [[]] * 5
    assert report.elapsed < 1.0


def test_certificates_reported():
    certs = {r.name: r.certificates for r in run_corpus().results}
    assert certs["Example 2"] == {"T": (3, 2, 1)}
    assert certs["Example 5 (Moore-Penrose inverse)"] == {"T": (2, 3, 1), "T+": (3, 1, 2)}


def test_perturbed_group_inverse_is_caught(tmp_path):
    shutil.copytree(default_corpus_dir(), tmp_path / "c")
    path = tmp_path / "c" / "example4.json"
    fx = json.loads(path.read_text())
    img = fx["group_inverse"]["basis_images"][0]["image"]
    img[0][0] = "7"
    path.write_text(json.dumps(fx))
    report = run_corpus(tmp_path / "c")
    bad = [r for r in report.results if not r.ok]
    assert [r.name for r in bad] == ["Example 4 (group inverse)"]
