#!/usr/bin/env python3
"""Independent high-precision oracle for the frozen constants in
tests/reference_values.hpp.

Recomputes the reference LEO scenario (geometry, path losses, amplitudes,
phases) with 50-digit arithmetic, plus a handful of standalone numeric
checks. Run it and paste the printed block into reference_values.hpp
whenever the reference scenario changes.

    python3 tests/oracle/compute_reference_values.py
"""

import mpmath as mp

mp.mp.dps = 50

C_LIGHT = mp.mpf(299792458)

# Reference LEO scenario (angles in radians, lengths in meters)
R_EARTH = mp.mpf(6371000)
SAT = (mp.mpf(0), mp.mpf(0), mp.mpf(550000))
RIS = (mp.mpf(0), mp.mpf("0.01"), mp.mpf(0))
USER = (mp.mpf(0), mp.mpf("0.02"), mp.mpf(0))

FREQ_HZ = mp.mpf("12e9")
TX_POWER_W = mp.mpf(10)
GAIN_TX = mp.mpf(10) ** 4        # 40 dBi
GAIN_RX = mp.mpf(10) ** 3        # 30 dBi
GAIN_RIS_IN = mp.mpf(10) ** 3    # 30 dBi
GAIN_RIS_OUT = mp.mpf(10) ** 3   # 30 dBi
EXCESS_DB = mp.mpf(2)
GAMMA_R_MAG = mp.mpf(10000)      # 10^4 unit elements, coherent


def to_ecef(point, radius):
    lat, lon, alt = point
    r = radius + alt
    return (r * mp.cos(lat) * mp.cos(lon),
            r * mp.cos(lat) * mp.sin(lon),
            r * mp.sin(lat))


def dist(a, b):
    return mp.sqrt(sum((x - y) ** 2 for x, y in zip(a, b)))


def emit(name, value):
    print(f"inline constexpr double {name} = {mp.nstr(value, 20)};")


def main():
    sat = to_ecef(SAT, R_EARTH)
    ris = to_ecef(RIS, R_EARTH)
    user = to_ecef(USER, R_EARTH)

    d_su = dist(sat, user)
    d_sr = dist(sat, ris)
    d_ru = dist(ris, user)

    lam = C_LIGHT / FREQ_HZ
    four_pi = 4 * mp.pi

    loss_su_fs = (four_pi * d_su / lam) ** 2
    loss_su = loss_su_fs * mp.mpf(10) ** (EXCESS_DB / 10)
    loss_sr = (four_pi * d_sr / lam) ** 2
    loss_ru = (four_pi * d_ru / lam) ** 2

    a_su = mp.sqrt(TX_POWER_W * GAIN_TX * GAIN_RX / loss_su)
    a_ru = mp.sqrt(TX_POWER_W * GAIN_TX * GAIN_RIS_IN * GAIN_RIS_OUT * GAIN_RX
                   / (loss_sr * loss_ru)) * GAMMA_R_MAG

    k = 2 * mp.pi / lam
    phi_su = k * d_su
    phi_sr = k * d_sr
    phi_ru = k * d_ru
    theta = phi_su - phi_sr - phi_ru
    phi_star = theta - 2 * mp.pi * mp.floor(theta / (2 * mp.pi))
    p_max = (a_su + a_ru) ** 2

    print("// Generated by tests/oracle/compute_reference_values.py (mpmath, 50 digits).")
    print("// Reference LEO scenario: see make_reference_scenario() in test_helpers.hpp.")
    emit("kRefEcefSatX", sat[0])
    emit("kRefEcefSatY", sat[1])
    emit("kRefEcefSatZ", sat[2])
    emit("kRefEcefRisX", ris[0])
    emit("kRefEcefRisY", ris[1])
    emit("kRefEcefRisZ", ris[2])
    emit("kRefEcefUserX", user[0])
    emit("kRefEcefUserY", user[1])
    emit("kRefEcefUserZ", user[2])
    emit("kRefDistSuM", d_su)
    emit("kRefDistSrM", d_sr)
    emit("kRefDistRuM", d_ru)
    emit("kRefWavelengthM", lam)
    emit("kRefLossSuDb", 10 * mp.log10(loss_su))
    emit("kRefLossSrDb", 10 * mp.log10(loss_sr))
    emit("kRefLossRuDb", 10 * mp.log10(loss_ru))
    emit("kRefAmplitudeSu", a_su)
    emit("kRefAmplitudeRu", a_ru)
    emit("kRefPhaseSuRad", phi_su)
    emit("kRefPhaseSrRad", phi_sr)
    emit("kRefPhaseRuRad", phi_ru)
    emit("kRefThetaRad", theta)
    emit("kRefOptimalPhaseRad", phi_star)
    emit("kRefPeakPowerW", p_max)

    print()
    print("// Standalone checks")
    emit("kFreeSpaceLoss1000mLambda01", (four_pi * 1000 / mp.mpf("0.1")) ** 2)
    emit("kExpectedPowerUnitSigmaHalfPi", 2 + 4 / mp.pi)
    # Local extremum of sinc: nonzero root of tan(s) = s in (pi, 3*pi/2)
    root = mp.findroot(lambda s: mp.tan(s) - s, mp.mpf("4.49"))
    emit("kSincExtremumRad", root)
    emit("kSincExtremumValue", mp.sin(root) / root)


if __name__ == "__main__":
    main()
