#!/usr/bin/env python3
# Copyright 2026 The LSFF Diet Cost Authors
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Independent baseline/fortified diet costs for the bundled fixture.

Reads the fixture CSVs with pandas, applies fortification, builds each
least-cost LP by hand and solves it with HiGHS through scipy. The result is
frozen in tests/golden/fixture_costs.csv and compared against the batch.

    python3 tests/oracles/fixture_oracle.py data/fixture tests/golden/fixture_costs.csv
"""

import json
import sys

import numpy as np
import pandas as pd
from scipy.optimize import linprog

RATE = 0.9
BREAD_SHARE = 0.75
SCENARIOS = ["CoNA", "CoNA-SS&FV", "CoNA-SUA"]
UG_NUTRIENTS = {"folate", "retinol", "selenium", "vitamin_a", "vitamin_b12"}


def fortify(foods, standards, premix):
    foods = foods.copy()
    numeric = foods.columns[foods.columns.get_loc("price_ppp_100g"):]
    foods[numeric] = foods[numeric].astype(float)
    for i, f in foods.iterrows():
        rows = standards[standards.vehicle == ("wheat_flour" if f.bread == 1 else f.vehicle)]
        if rows.empty or (f.bread != 1 and not isinstance(f.vehicle, str)):
            continue
        share = BREAD_SHARE if f.bread == 1 else 1.0
        for nutrient, level in rows.groupby("nutrient")["level"].min().items():
            per_100g_mg = share * RATE * level / 10.0
            col = [c for c in foods.columns if c.startswith(nutrient + "_") and c[len(nutrient) + 1:] in ("mg", "ug")]
            foods.loc[i, col[0]] += per_100g_mg * (1000.0 if nutrient in UG_NUTRIENTS else 1.0)
        vehicle = "wheat_flour" if f.bread == 1 else f.vehicle
        cost = premix[premix.vehicle == vehicle].cost_ppp_kg.sum()
        foods.loc[i, "price_ppp_100g"] += share * cost / 10.0
    return foods


def group_members(foods, group):
    if group == "fruits_vegetables":
        return foods.group.isin(["fruits", "vegetables"]).to_numpy()
    return (foods.group == group).to_numpy()


def solve(foods, reqs, energy, scenario, hdb, sua_bounds, rescale):
    kcal = foods.energy_kcal.to_numpy(dtype=float)
    a_ub, b_ub, a_eq, b_eq = [], [], [], []
    for _, r in reqs.iterrows():
        col = foods[f"{r.nutrient}_{r.unit}"].to_numpy(dtype=float)
        if r.kind == "target":
            a_eq.append(col)
            b_eq.append(r.target)
        if r.kind in ("range", "lower"):
            a_ub.append(-col)
            b_ub.append(-r.lower)
        if r.kind in ("range", "upper"):
            a_ub.append(col)
            b_ub.append(r.upper)
    ref = hdb["reference_energy_kcal"]
    if scenario == "CoNA-SS&FV":
        for g in ("starchy_staples", "fruits_vegetables"):
            a_ub.append(-kcal * group_members(foods, g))
            b_ub.append(-hdb["targets_kcal"][g] * energy / ref)
    if scenario == "CoNA-SUA":
        factor = energy / ref if rescale else 1.0
        for g, (lo, hi) in sua_bounds.items():
            a_ub.append(-kcal * group_members(foods, g))
            b_ub.append(-lo * factor)
            a_ub.append(kcal * group_members(foods, g))
            b_ub.append(hi * factor)
    res = linprog(foods.price_ppp_100g.to_numpy(dtype=float), A_ub=np.array(a_ub), b_ub=np.array(b_ub),
                  A_eq=np.array(a_eq), b_eq=np.array(b_eq), bounds=(0, None), method="highs",
                  options={"primal_feasibility_tolerance": 1e-10, "dual_feasibility_tolerance": 1e-10})
    return ("Optimal", res.fun) if res.status == 0 else ("Infeasible" if res.status == 2 else "Error", None)


def sua_iqr(sua, country):
    out = {}
    s = sua[sua.country == country]
    fruit = s[s.group == "fruits"].set_index("year").kcal_capita_day
    veg = s[s.group == "vegetables"].set_index("year").kcal_capita_day
    series = {g: s[s.group == g].kcal_capita_day.to_numpy() for g in
              ("starchy_staples", "legumes_nuts_seeds", "animal_source_foods")}
    series["fruits_vegetables"] = (fruit + veg).dropna().to_numpy()
    for g, v in series.items():
        out[g] = (np.percentile(v, 25), np.percentile(v, 75))
    return out


def main(data_dir, out_path):
    foods = pd.read_csv(f"{data_dir}/foods.csv", keep_default_na=False, na_values={"vehicle": [""]})
    reqs = pd.read_csv(f"{data_dir}/requirements.csv")
    groups = pd.read_csv(f"{data_dir}/subgroups.csv")
    standards = pd.read_csv(f"{data_dir}/standards.csv")
    premix = pd.read_csv(f"{data_dir}/premix.csv")
    sua = pd.read_csv(f"{data_dir}/sua.csv")
    config = json.load(open(f"{data_dir}/config.json"))
    rows = []
    for country in sorted(foods.country.unique()):
        base_foods = foods[foods.country == country].reset_index(drop=True)
        fort_foods = fortify(base_foods, standards[standards.country == country], premix[premix.country == country])
        bounds = sua_iqr(sua, country)
        for _, g in groups.iterrows():
            r = reqs[reqs.subgroup == g.subgroup]
            for scenario in SCENARIOS:
                args = (r, g.energy_kcal_day, scenario, config["hdb"], bounds, config["sua_rescale_by_energy"])
                bs, bc = solve(base_foods, *args)
                fs, fc = solve(fort_foods, *args)
                rows.append((country, g.subgroup, scenario, bs, fs, "" if bc is None else repr(bc),
                             "" if fc is None else repr(fc)))
    pd.DataFrame(rows, columns=["country", "subgroup", "scenario", "base_status", "fort_status",
                                "cost_base_ppp_day", "cost_fort_ppp_day"]).to_csv(out_path, index=False)


if __name__ == "__main__":
    main(sys.argv[1], sys.argv[2])
