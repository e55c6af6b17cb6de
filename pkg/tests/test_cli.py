import io
import json

from powerstruct.cli import main


def run(argv):
    out = io.StringIO()
    err = io.StringIO()
    rc = main(argv, out=out, err=err)
    return rc, out.getvalue(), err.getvalue()


def test_power_text_golden():
    rc, out, err = run(
        ["power", "--ring", "Z", "--lambda", "kapranov", "--order", "3",
         "--series", "1 - t", "--exponent", "2"]
    )
    assert rc == 0
    assert out == "t^0: 1\nt^1: -2\nt^2: 1\nt^3: 0\n"


def test_power_json_golden():
    rc, out, err = run(
        ["power", "--ring", "Z[u,v]", "--lambda", "poly-product", "--order", "2",
         "--series", "1 + t", "--exponent", "u*v", "--format", "json"]
    )
    assert rc == 0
    assert out == (
        '{"ring": "Z[u,v]", "order": 2,'
        ' "coefficients": ["1", "u*v", "-u*v + u^2*v^2"]}\n'
    )
    payload = json.loads(out)
    assert payload["coefficients"][2] == "-u*v + u^2*v^2"


def test_exp_golden():
    rc, out, err = run(
        ["exp", "--ring", "Z", "--lambda", "kapranov", "--order", "4",
         "--coeffs", "2,1"]
    )
    assert rc == 0
    assert out == "t^0: 1\nt^1: 2\nt^2: 4\nt^3: 6\nt^4: 9\n"


def test_log_golden():
    rc, out, err = run(
        ["log", "--ring", "Z", "--lambda", "kapranov", "--order", "4",
         "--series", "1 + 2*t + 3*t^2 + 4*t^3 + 5*t^4"]
    )
    assert rc == 0
    assert out == "t^1: 2\nt^2: 0\nt^3: 0\nt^4: 0\n"


def test_exp_log_roundtrip():
    rc, logged, _ = run(
        ["log", "--ring", "Z", "--lambda", "binomial", "--order", "5",
         "--series", "1 + 3*t + 3*t^2 + t^3"]
    )
    assert rc == 0
    coeffs = ",".join(line.split(": ")[1] for line in logged.splitlines())
    rc, out, _ = run(
        ["exp", "--ring", "Z", "--lambda", "binomial", "--order", "5",
         "--coeffs", coeffs]
    )
    assert rc == 0
    assert out == "t^0: 1\nt^1: 3\nt^2: 3\nt^3: 1\nt^4: 0\nt^5: 0\n"


def test_zeta_text_golden():
    rc, out, err = run(["zeta", "--order", "2", "--hodge", "1 + u*v"])
    assert rc == 0
    assert out == "t^0: 1\nt^1: 1 + u*v\nt^2: 1 + u*v + u^2*v^2\n"


def test_zeta_euler_json_golden():
    rc, out, err = run(
        ["zeta", "--order", "3", "--hodge", "2", "--euler", "--format", "json"]
    )
    assert rc == 0
    assert out == '{"ring": "Z", "order": 3, "coefficients": ["1", "2", "3", "4"]}\n'


def test_hilb_local_json_golden():
    rc, out, err = run(["hilb", "--local", "--order", "3", "--format", "json"])
    assert rc == 0
    assert out == (
        '{"ring": "Z[L]", "order": 3,'
        ' "coefficients": ["1", "1", "1 + L", "1 + L + L^2"]}\n'
    )


def test_hilb_surface_golden():
    rc, out, err = run(["hilb", "--order", "2", "--hodge", "1 + u*v"])
    assert rc == 0
    assert out == "t^0: 1\nt^1: 1 + u*v\nt^2: 1 + 2*u*v + 2*u^2*v^2\n"


def test_oracle_text_golden():
    rc, out, err = run(
        ["oracle", "--m-size", "3", "--target-size", "1", "--coeff-sizes", "2",
         "--order", "2"]
    )
    assert rc == 0
    assert out == "t^1: oracle=6 formula=6\nt^2: oracle=12 formula=12\nverdict: agree\n"


def test_oracle_json_golden():
    rc, out, err = run(
        ["oracle", "--m-size", "2", "--target-size", "2", "--coeff-sizes", "1,1",
         "--order", "3", "--format", "json"]
    )
    assert rc == 0
    payload = json.loads(out)
    assert payload == {
        "ring": "Z",
        "order": 3,
        "coefficients": ["2", "3", "2"],
        "formula": ["2", "3", "2"],
        "verdict": "agree",
    }


def test_determinism():
    argv = ["power", "--ring", "Z[u,v]", "--lambda", "kapranov", "--order", "4",
            "--series", "1 + u*t - v*t^2", "--exponent", "u + v"]
    first = run(argv)
    for _ in range(3):
        assert run(argv) == first


def test_parse_error_exit_code():
    rc, out, err = run(
        ["power", "--ring", "Z", "--lambda", "kapranov", "--order", "2",
         "--series", "1 + + t", "--exponent", "1"]
    )
    assert rc == 1
    assert err == "error: unexpected '+' at offset 4\n"
    assert out == ""


def test_usage_error_exit_code():
    rc, out, err = run(["bogus"])
    assert rc == 1
    rc, out, err = run(["zeta", "--order", "3"])
    assert rc == 1


def test_computation_error_exit_code():
    rc, out, err = run(
        ["power", "--ring", "Z", "--lambda", "kapranov", "--order", "2",
         "--series", "2 + t", "--exponent", "1"]
    )
    assert rc == 2
    assert err == "error: only series with constant term 1 decompose\n"

    rc, out, err = run(
        ["power", "--ring", "Z[u,v]", "--lambda", "binomial", "--order", "2",
         "--series", "1 + t", "--exponent", "u"]
    )
    assert rc == 2

    rc, out, err = run(
        ["oracle", "--m-size", "5", "--target-size", "1", "--coeff-sizes", "4,4",
         "--order", "6", "--budget", "100"]
    )
    assert rc == 2
