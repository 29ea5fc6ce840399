#!/usr/bin/env python3
"""Generate the bundled sample datasets.

Both files are synthetic but schema-compatible stand-ins for the public
datasets they imitate, so the tool runs out of the box without any
downloads:

  data/heart_synth.csv   - Cleveland-style heart disease table
                           (8 categorical columns, 6 numeric columns, 303 rows)
  data/airbnb_synth.csv  - NYC listings-style table
                           (4 categorical columns, 4 numeric columns, 420 rows)

Regenerate with:  python3 scripts/make_datasets.py
Output is deterministic (fixed seed, fixed formatting).
"""

import os
import numpy as np

OUT_DIR = os.path.join(os.path.dirname(__file__), "..", "data")


def pick(rng, options, probs):
    return options[rng.choice(len(options), p=probs)]


def clip_int(rng, mean, sd, lo, hi):
    return int(np.clip(round(rng.normal(mean, sd)), lo, hi))


def make_heart(path, n=303, seed=20240312):
    rng = np.random.default_rng(seed)
    header = [
        "age", "sex", "cp", "trestbps", "chol", "fbs", "restecg",
        "thalach", "exang", "oldpeak", "slope", "ca", "thal", "disease",
    ]
    cps = ["typical", "atypical", "nonanginal", "asymptomatic"]
    restecgs = ["normal", "st-t", "hypertrophy"]
    slopes = ["up", "flat", "down"]
    thals = ["normal", "fixed", "reversable"]

    rows = []
    for _ in range(n):
        diseased = rng.random() < 0.459
        if diseased:
            age = clip_int(rng, 56.6, 7.9, 29, 77)
            sex = "male" if rng.random() < 0.82 else "female"
            cp = pick(rng, cps, [0.07, 0.06, 0.13, 0.74])
            trestbps = clip_int(rng, 134.6, 18.8, 94, 200)
            chol = clip_int(rng, 251.5, 49.6, 126, 564)
            fbs = "true" if rng.random() < 0.14 else "false"
            restecg = pick(rng, restecgs, [0.40, 0.07, 0.53])
            exang = "yes" if rng.random() < 0.55 else "no"
            slope = pick(rng, slopes, [0.28, 0.59, 0.13])
            ca = pick(rng, [0, 1, 2, 3], [0.32, 0.32, 0.22, 0.14])
            thal = pick(rng, thals, [0.27, 0.09, 0.64])
            disease = "Yes"
        else:
            age = clip_int(rng, 52.5, 9.5, 29, 77)
            sex = "male" if rng.random() < 0.56 else "female"
            cp = pick(rng, cps, [0.10, 0.25, 0.42, 0.23])
            trestbps = clip_int(rng, 129.3, 16.2, 94, 200)
            chol = clip_int(rng, 242.6, 53.8, 126, 564)
            fbs = "true" if rng.random() < 0.15 else "false"
            restecg = pick(rng, restecgs, [0.56, 0.02, 0.42])
            exang = "yes" if rng.random() < 0.14 else "no"
            slope = pick(rng, slopes, [0.65, 0.30, 0.05])
            ca = pick(rng, [0, 1, 2, 3], [0.79, 0.13, 0.05, 0.03])
            thal = pick(rng, thals, [0.79, 0.04, 0.17])
            disease = "No"
        # Exercise intolerance markers move with chest pain type, ST slope and
        # exercise angina far more sharply among the diseased, so grouping by
        # those columns separates the target subset from the whole table.
        gain = 1.0 if diseased else 0.15
        thalach_shift = gain * ((-24.0 if cp == "asymptomatic" else 8.0)
                                + (-20.0 if exang == "yes" else 8.0)
                                + (-14.0 if slope == "flat" else 0.0))
        oldpeak_shift = gain * ((1.4 if cp == "asymptomatic" else 0.0)
                                + (1.3 if exang == "yes" else 0.0)
                                + (1.6 if slope == "down" else 0.0)
                                + 0.6 * ca)
        if diseased:
            thalach = clip_int(rng, 146.0 + thalach_shift, 11.0, 71, 202)
            oldpeak = float(np.clip(0.2 + rng.gamma(1.9, 0.4) + oldpeak_shift, 0.1, 6.2))
        else:
            thalach = clip_int(rng, 157.0 + thalach_shift, 11.0, 71, 202)
            oldpeak = float(np.clip(0.1 + rng.gamma(0.9, 0.35) + oldpeak_shift, 0.1, 6.2))
        rows.append([
            age, sex, cp, trestbps, chol, fbs, restecg, thalach, exang,
            f"{oldpeak:.1f}", slope, ca, thal, disease,
        ])

    with open(path, "w", newline="") as f:
        f.write(",".join(header) + "\n")
        for r in rows:
            f.write(",".join(str(v) for v in r) + "\n")
    print(f"wrote {path} ({len(rows)} rows)")


def make_airbnb(path, n=420, seed=77100413):
    rng = np.random.default_rng(seed)
    header = [
        "neighbourhood_group", "neighbourhood", "room_type",
        "instant_bookable", "price", "minimum_nights",
        "number_of_reviews", "availability_365",
    ]
    groups = ["Manhattan", "Brooklyn", "Queens", "Bronx", "Staten Island"]
    group_p = [0.44, 0.41, 0.12, 0.02, 0.01]
    hoods = {
        "Manhattan": ["Harlem", "Midtown", "East Village", "Chelsea"],
        "Brooklyn": ["Williamsburg", "Bushwick", "Bedford-Stuyvesant"],
        "Queens": ["Astoria", "Flushing"],
        "Bronx": ["Fordham"],
        "Staten Island": ["St. George"],
    }
    rooms = ["Entire home/apt", "Private room", "Shared room"]
    room_p = [0.52, 0.45, 0.03]
    base_price = {"Manhattan": 5.3, "Brooklyn": 4.9, "Queens": 4.6,
                  "Bronx": 4.4, "Staten Island": 4.5}
    room_adj = {"Entire home/apt": 0.0, "Private room": -0.7, "Shared room": -1.1}

    rows = []
    for _ in range(n):
        g = pick(rng, groups, group_p)
        hood = hoods[g][rng.choice(len(hoods[g]))]
        room = pick(rng, rooms, room_p)
        price = int(np.clip(round(np.exp(rng.normal(base_price[g] + room_adj[room], 0.45))), 10, 2000))
        min_nights = int(np.clip(rng.geometric(0.35), 1, 30))
        reviews = int(np.clip(round(rng.gamma(0.9, 28.0)), 0, 350))
        avail = 0 if rng.random() < 0.30 else int(rng.integers(1, 366))
        rows.append([g, hood, room, "t" if rng.random() < 0.25 else "f",
                     price, min_nights, reviews, avail])

    with open(path, "w", newline="") as f:
        f.write(",".join(header) + "\n")
        for r in rows:
            f.write(",".join(str(v) for v in r) + "\n")
    print(f"wrote {path} ({len(rows)} rows)")


if __name__ == "__main__":
    os.makedirs(OUT_DIR, exist_ok=True)
    make_heart(os.path.join(OUT_DIR, "heart_synth.csv"))
    make_airbnb(os.path.join(OUT_DIR, "airbnb_synth.csv"))
