"""Smoke tests for the kauffman2bridge extension module."""

import kauffman2bridge as k


def test_delta_algebra():
    d = k.delta()
    assert d.eval("2", "3") == "25/16"
    assert d * d.inv() == k.RatFunc(1)
    assert d.mirror() == d


def test_compute_and_oracle_agree():
    assert k.verify("[2,1,2]")
    assert k.compute("[1]") == k.alpha(1) * k.delta()
    assert k.compute("[-1]") == k.alpha(-1) * k.delta()
    assert k.oracle("[2,-1,2]") == k.compute("[2,-1,2]")


def test_mirror_property():
    v = k.compute("[-2,1,-2]")
    assert k.compute("[2,-1,2]") == v.mirror()


def test_reduce_and_render():
    v = k.compute("[-2,1,-2]", reduce=False)
    assert v.reduce() == v
    assert "a" in v.reduce().plain()
    assert "\\alpha" in v.reduce().latex()


def test_json_round_trip():
    v = k.compute("[3]")
    assert k.from_json(v.json()) == v


def test_bad_notation():
    for text in ("[1,2]", "[0]", "[2,,3]", "nope"):
        try:
            k.compute(text)
        except ValueError:
            pass
        else:
            raise AssertionError(f"expected ValueError for {text!r}")


def main():
    tests = [v for n, v in globals().items() if n.startswith("test_")]
    for t in tests:
        t()
        print(f"{t.__name__}: ok")
    print(f"{len(tests)} smoke tests passed")


if __name__ == "__main__":
    main()
