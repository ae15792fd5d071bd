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

"""Writes the bundled synthetic dataset (six countries, 22 subgroups).

The output is already in canonical form: loading and re-saving it with the
library reproduces every file byte for byte.

    python3 tools/make_fixture.py data/fixture
"""

import argparse
import csv
import json
import math
import pathlib
import random

SEED = 20260314

NUTRIENTS = [
    ("energy", "kcal"), ("protein", "g"), ("lipids", "g"), ("carbohydrate", "g"),
    ("calcium", "mg"), ("choline", "mg"), ("copper", "mg"), ("folate", "ug"),
    ("iron", "mg"), ("magnesium", "mg"), ("manganese", "mg"), ("niacin", "mg"),
    ("phosphorus", "mg"), ("retinol", "ug"), ("riboflavin", "mg"), ("selenium", "ug"),
    ("sodium", "mg"), ("thiamin", "mg"), ("vitamin_a", "ug"), ("vitamin_b5", "mg"),
    ("vitamin_b6", "mg"), ("vitamin_b12", "ug"), ("vitamin_c", "mg"), ("vitamin_e", "mg"),
    ("zinc", "mg"),
]

# Micronutrient order in the food table below.
MICROS = ["calcium", "choline", "copper", "folate", "iron", "magnesium", "manganese", "niacin",
          "phosphorus", "retinol", "riboflavin", "selenium", "sodium", "thiamin", "vitamin_a",
          "vitamin_b5", "vitamin_b6", "vitamin_b12", "vitamin_c", "vitamin_e", "zinc"]

SS, FR, VE, LNS, ASF, OF, OT = ("starchy_staples", "fruits", "vegetables", "legumes_nuts_seeds",
                                "animal_source_foods", "oils_fats", "other")

# id, name, group, vehicle, bread, price PPP/100 g, protein, fat, carbohydrate, micros.
FOODS = [
    ("wheat_flour", "Wheat flour", SS, "wheat_flour", 0, 0.09, 10.3, 1.0, 76.0,
     [15, 10, 0.14, 26, 1.2, 22, 0.7, 1.3, 108, 0, 0.04, 34, 2, 0.12, 0, 0.44, 0.04, 0, 0, 0.06, 0.7]),
    ("wholemeal_flour", "Wholemeal flour", SS, "wheat_flour", 0, 0.12, 13.2, 2.5, 72.0,
     [34, 31, 0.41, 44, 3.6, 137, 4.0, 5.0, 357, 0, 0.17, 62, 2, 0.5, 0, 0.6, 0.4, 0, 0, 0.7, 2.6]),
    ("maize_flour", "Maize flour", SS, "maize_flour", 0, 0.07, 6.9, 3.9, 76.9,
     [7, 22, 0.19, 30, 2.4, 93, 0.46, 1.9, 272, 0, 0.08, 15, 5, 0.25, 11, 0.66, 0.37, 0, 0, 0.4, 1.7]),
    ("rice_white", "White rice", SS, "rice", 0, 0.11, 7.1, 0.7, 80.0,
     [28, 5.8, 0.22, 8, 0.8, 25, 1.1, 1.6, 115, 0, 0.05, 15, 5, 0.07, 0, 1.0, 0.16, 0, 0, 0.11, 1.1]),
    ("rice_brown", "Brown rice", SS, None, 0, 0.16, 7.9, 2.9, 76.0,
     [23, 9, 0.28, 20, 1.5, 143, 3.7, 5.1, 333, 0, 0.04, 23, 7, 0.4, 0, 1.5, 0.5, 0, 0, 0.6, 2.0]),
    ("bread_white", "White bread", SS, None, 1, 0.22, 9.0, 3.2, 49.0,
     [60, 13, 0.1, 30, 1.5, 23, 0.5, 1.8, 98, 0, 0.08, 28, 490, 0.1, 0, 0.4, 0.07, 0, 0, 0.2, 0.7]),
    ("sorghum", "Sorghum", SS, None, 0, 0.10, 10.6, 3.5, 72.0,
     [13, 20, 0.28, 20, 3.4, 165, 1.6, 3.7, 289, 0, 0.1, 12, 2, 0.33, 0, 0.37, 0.44, 0, 0, 0.5, 1.7]),
    ("millet", "Millet", SS, None, 0, 0.14, 11.0, 4.2, 73.0,
     [8, 40, 0.75, 85, 3.0, 114, 1.6, 4.7, 285, 0, 0.29, 2.7, 5, 0.42, 0, 0.85, 0.38, 0, 0, 0.05, 1.7]),
    ("cassava", "Cassava", SS, None, 0, 0.05, 1.4, 0.3, 38.0,
     [16, 23.7, 0.1, 27, 0.27, 21, 0.38, 0.85, 27, 0, 0.05, 0.7, 14, 0.09, 1, 0.1, 0.09, 0, 20.6, 0.19, 0.34]),
    ("potato", "Potato", SS, None, 0, 0.07, 2.0, 0.1, 17.0,
     [12, 12, 0.11, 15, 0.8, 23, 0.15, 1.1, 57, 0, 0.03, 0.4, 6, 0.08, 0, 0.3, 0.3, 0, 19.7, 0.01, 0.3]),
    ("sweet_potato", "Sweet potato", SS, None, 0, 0.08, 1.6, 0.1, 20.0,
     [30, 12, 0.15, 11, 0.6, 25, 0.26, 0.56, 47, 0, 0.06, 0.6, 55, 0.08, 709, 0.8, 0.2, 0, 2.4, 0.26, 0.3]),
    ("plantain", "Plantain", SS, None, 0, 0.09, 1.3, 0.4, 32.0,
     [3, 13.6, 0.08, 22, 0.6, 37, 0.15, 0.69, 34, 0, 0.05, 1.5, 4, 0.05, 56, 0.26, 0.3, 0, 18.4, 0.14, 0.14]),
    ("oats", "Rolled oats", SS, None, 0, 0.20, 13.0, 6.5, 68.0,
     [54, 40, 0.6, 32, 4.7, 177, 4.9, 1.1, 523, 0, 0.15, 28.9, 2, 0.46, 0, 1.1, 0.1, 0, 0, 0.4, 4.0]),
    ("pasta", "Pasta", SS, None, 0, 0.18, 13.0, 1.5, 75.0,
     [21, 15, 0.29, 18, 1.3, 53, 0.9, 3.2, 189, 0, 0.06, 63, 6, 0.1, 0, 0.43, 0.14, 0, 0, 0.1, 1.4]),
    ("banana", "Banana", FR, None, 0, 0.10, 1.1, 0.3, 23.0,
     [5, 9.8, 0.08, 20, 0.26, 27, 0.27, 0.67, 22, 0, 0.07, 1, 1, 0.03, 3, 0.33, 0.37, 0, 8.7, 0.1, 0.15]),
    ("mango", "Mango", FR, None, 0, 0.14, 0.8, 0.4, 15.0,
     [11, 7.6, 0.11, 43, 0.16, 10, 0.06, 0.67, 14, 0, 0.04, 0.6, 1, 0.03, 54, 0.2, 0.12, 0, 36, 0.9, 0.09]),
    ("orange", "Orange", FR, None, 0, 0.12, 0.9, 0.1, 12.0,
     [40, 8.4, 0.05, 30, 0.1, 10, 0.03, 0.28, 14, 0, 0.04, 0.5, 0, 0.09, 11, 0.25, 0.06, 0, 53, 0.18, 0.07]),
    ("papaya", "Papaya", FR, None, 0, 0.11, 0.5, 0.3, 11.0,
     [20, 6, 0.05, 37, 0.25, 21, 0.04, 0.36, 10, 0, 0.03, 0.6, 8, 0.02, 47, 0.19, 0.04, 0, 61, 0.3, 0.08]),
    ("guava", "Guava", FR, None, 0, 0.15, 2.6, 1.0, 14.0,
     [18, 7.6, 0.23, 49, 0.26, 22, 0.15, 1.1, 40, 0, 0.04, 0.6, 2, 0.07, 31, 0.45, 0.11, 0, 228, 0.7, 0.23]),
    ("apple", "Apple", FR, None, 0, 0.20, 0.3, 0.2, 14.0,
     [6, 3.4, 0.03, 3, 0.12, 5, 0.04, 0.09, 11, 0, 0.03, 0, 1, 0.02, 3, 0.06, 0.04, 0, 4.6, 0.18, 0.04]),
    ("watermelon", "Watermelon", FR, None, 0, 0.06, 0.6, 0.2, 7.6,
     [7, 4.1, 0.04, 3, 0.24, 10, 0.04, 0.18, 11, 0, 0.02, 0.4, 1, 0.03, 28, 0.22, 0.05, 0, 8.1, 0.05, 0.1]),
    ("pineapple", "Pineapple", FR, None, 0, 0.10, 0.5, 0.1, 13.0,
     [13, 5.5, 0.11, 18, 0.29, 12, 0.93, 0.5, 8, 0, 0.03, 0.1, 1, 0.08, 3, 0.21, 0.11, 0, 47.8, 0.02, 0.12]),
    ("spinach", "Spinach", VE, None, 0, 0.18, 2.9, 0.4, 3.6,
     [99, 19, 0.13, 194, 2.7, 79, 0.9, 0.72, 49, 0, 0.19, 1, 79, 0.08, 469, 0.07, 0.2, 0, 28, 2.0, 0.53]),
    ("cabbage", "Cabbage", VE, None, 0, 0.07, 1.3, 0.1, 5.8,
     [40, 10.7, 0.02, 43, 0.47, 12, 0.16, 0.23, 26, 0, 0.04, 0.3, 18, 0.06, 5, 0.21, 0.12, 0, 36.6, 0.15, 0.18]),
    ("carrot", "Carrot", VE, None, 0, 0.09, 0.9, 0.2, 9.6,
     [33, 8.8, 0.05, 19, 0.3, 12, 0.14, 0.98, 35, 0, 0.06, 0.1, 69, 0.07, 835, 0.27, 0.14, 0, 5.9, 0.66, 0.24]),
    ("tomato", "Tomato", VE, None, 0, 0.12, 0.9, 0.2, 3.9,
     [10, 6.7, 0.06, 15, 0.27, 11, 0.11, 0.59, 24, 0, 0.02, 0, 5, 0.04, 42, 0.09, 0.08, 0, 13.7, 0.54, 0.17]),
    ("onion", "Onion", VE, None, 0, 0.08, 1.1, 0.1, 9.3,
     [23, 6.1, 0.04, 19, 0.21, 10, 0.13, 0.12, 29, 0, 0.03, 0.5, 4, 0.05, 0, 0.12, 0.12, 0, 7.4, 0.02, 0.17]),
    ("kale", "Kale", VE, None, 0, 0.22, 4.3, 0.9, 8.8,
     [150, 0.8, 0.29, 141, 1.5, 47, 0.66, 1.0, 92, 0, 0.13, 0.9, 38, 0.11, 500, 0.09, 0.27, 0, 120, 1.5, 0.56]),
    ("pumpkin", "Pumpkin", VE, None, 0, 0.08, 1.0, 0.1, 6.5,
     [21, 8.2, 0.13, 16, 0.8, 12, 0.13, 0.6, 44, 0, 0.11, 0.3, 1, 0.05, 426, 0.3, 0.06, 0, 9, 1.06, 0.32]),
    ("okra", "Okra", VE, None, 0, 0.15, 1.9, 0.2, 7.5,
     [82, 12.3, 0.11, 60, 0.62, 57, 0.79, 1.0, 61, 0, 0.06, 0.7, 7, 0.2, 36, 0.25, 0.22, 0, 23, 0.27, 0.58]),
    ("eggplant", "Eggplant", VE, None, 0, 0.10, 1.0, 0.2, 5.9,
     [9, 6.9, 0.08, 22, 0.23, 14, 0.23, 0.65, 24, 0, 0.04, 0.3, 2, 0.04, 1, 0.28, 0.08, 0, 2.2, 0.3, 0.16]),
    ("amaranth_leaves", "Amaranth leaves", VE, None, 0, 0.10, 2.5, 0.3, 4.0,
     [215, 20, 0.16, 85, 2.3, 55, 0.89, 0.66, 50, 0, 0.16, 0.9, 20, 0.03, 146, 0.06, 0.19, 0, 43, 1.0, 0.9]),
    ("beans", "Dry beans", LNS, None, 0, 0.16, 21.6, 1.4, 62.0,
     [123, 66, 0.9, 394, 5.0, 171, 1.0, 0.5, 352, 0, 0.2, 3.2, 12, 0.6, 0, 0.8, 0.4, 0, 4.5, 0.2, 2.8]),
    ("lentils", "Lentils", LNS, None, 0, 0.22, 24.6, 1.1, 63.0,
     [35, 96, 0.75, 479, 6.5, 47, 1.4, 2.6, 281, 0, 0.21, 8.3, 6, 0.87, 2, 2.1, 0.54, 0, 4.5, 0.5, 3.3]),
    ("chickpeas", "Chickpeas", LNS, None, 0, 0.20, 20.5, 6.0, 63.0,
     [57, 95, 0.66, 557, 4.3, 79, 2.2, 1.5, 252, 0, 0.21, 8.2, 24, 0.48, 3, 1.6, 0.54, 0, 4, 0.8, 2.8]),
    ("groundnuts", "Groundnuts", LNS, None, 0, 0.30, 25.8, 49.0, 16.0,
     [92, 52, 1.1, 240, 4.6, 168, 1.9, 12, 376, 0, 0.13, 7.2, 18, 0.64, 0, 1.8, 0.35, 0, 0, 8.3, 3.3]),
    ("cowpeas", "Cowpeas", LNS, None, 0, 0.18, 23.5, 1.3, 60.0,
     [110, 94, 0.85, 633, 8.3, 184, 1.5, 2.1, 424, 0, 0.17, 9, 16, 0.85, 2, 1.5, 0.36, 0, 1.5, 0.4, 3.4]),
    ("soybeans", "Soybeans", LNS, None, 0, 0.19, 36.5, 19.9, 30.0,
     [277, 116, 1.66, 375, 15.7, 280, 2.5, 1.6, 704, 0, 0.87, 17.8, 2, 0.87, 1, 0.79, 0.38, 0, 6, 0.85, 4.9]),
    ("sesame_seeds", "Sesame seeds", LNS, None, 0, 0.45, 17.7, 49.7, 23.4,
     [975, 25.6, 4.1, 97, 14.6, 351, 2.5, 4.5, 629, 0, 0.25, 34.4, 11, 0.79, 0, 0.05, 0.79, 0, 0, 0.25, 7.8]),
    ("milk", "Milk", ASF, None, 0, 0.10, 3.3, 3.3, 4.8,
     [113, 14, 0.03, 5, 0.03, 10, 0, 0.09, 84, 45, 0.17, 3.7, 43, 0.05, 46, 0.37, 0.04, 0.45, 0, 0.07, 0.37]),
    ("eggs", "Eggs", ASF, None, 0, 0.45, 12.6, 9.5, 0.7,
     [56, 294, 0.07, 47, 1.75, 12, 0.03, 0.08, 198, 160, 0.46, 30.7, 142, 0.04, 160, 1.5, 0.17, 0.89, 0, 1.05, 1.29]),
    ("chicken", "Chicken", ASF, None, 0, 0.55, 18.6, 15.0, 0.0,
     [11, 59, 0.05, 6, 0.9, 20, 0.02, 6.8, 147, 41, 0.15, 14.4, 70, 0.06, 41, 0.9, 0.35, 0.3, 1.6, 0.2, 1.3]),
    ("beef", "Beef", ASF, None, 0, 0.95, 18.6, 14.0, 0.0,
     [18, 65, 0.07, 6, 2.1, 18, 0.01, 4.5, 175, 0, 0.15, 15, 60, 0.05, 0, 0.6, 0.37, 2.5, 0, 0.2, 4.6]),
    ("dried_small_fish", "Dried small fish", ASF, None, 0, 0.80, 63.0, 8.0, 0.0,
     [2000, 80, 0.5, 15, 10, 150, 0.3, 8, 1200, 50, 0.3, 60, 500, 0.05, 50, 1.0, 0.2, 10, 0, 2.0, 6.0]),
    ("fresh_fish", "Fresh fish", ASF, None, 0, 0.60, 19.0, 5.0, 0.0,
     [30, 65, 0.05, 10, 0.8, 30, 0.02, 5, 220, 20, 0.1, 36, 70, 0.08, 20, 0.7, 0.3, 2.5, 0, 1.0, 0.6]),
    ("beef_liver", "Beef liver", ASF, None, 0, 0.70, 20.4, 3.6, 3.9,
     [5, 333, 9.8, 290, 4.9, 18, 0.3, 13, 387, 4968, 2.8, 39.7, 69, 0.19, 4968, 7.2, 1.08, 59, 1.3, 0.38, 4.0]),
    ("yogurt", "Yogurt", ASF, None, 0, 0.25, 3.5, 3.3, 4.7,
     [121, 15, 0.01, 7, 0.05, 12, 0, 0.08, 95, 27, 0.14, 2.2, 46, 0.03, 27, 0.39, 0.03, 0.37, 0.5, 0.06, 0.59]),
    ("vegetable_oil", "Vegetable oil", OF, "oil", 0, 0.20, 0.0, 100.0, 0.0,
     [0, 0.2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 25, 0]),
    ("palm_oil", "Palm oil", OF, "oil", 0, 0.15, 0.0, 100.0, 0.0,
     [0, 0.3, 0, 0, 0.01, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 15.9, 0]),
    ("butter", "Butter", OF, None, 0, 0.90, 0.9, 81.0, 0.1,
     [24, 19, 0, 3, 0.02, 2, 0, 0.04, 24, 671, 0.03, 1, 11, 0.01, 684, 0.11, 0, 0.17, 0, 2.3, 0.09]),
    ("sugar", "Sugar", OT, None, 0, 0.08, 0.0, 0.0, 100.0,
     [1, 0, 0.01, 0, 0.05, 0, 0, 0, 0, 0, 0.02, 0.6, 1, 0, 0, 0, 0, 0, 0, 0, 0]),
]

COUNTRIES = [
    # name, region, price multiplier
    ("Arvenia", "Sub-Saharan Africa", 2.2),
    ("Bellora", "Sub-Saharan Africa", 2.5),
    ("Caldria", "South Asia", 2.0),
    ("Dunmark", "South Asia", 2.4),
    ("Esteva", "Latin America & Caribbean", 3.0),
    ("Fenwick", "Latin America & Caribbean", 2.75),
]

# level in mg/kg; status
STANDARDS = [
    ("Arvenia", "wheat_flour", "iron", 30, "mandatory"),
    ("Arvenia", "wheat_flour", "zinc", 30, "mandatory"),
    ("Arvenia", "wheat_flour", "folate", 1.3, "mandatory"),
    ("Arvenia", "wheat_flour", "vitamin_b12", 0.008, "mandatory"),
    ("Arvenia", "maize_flour", "iron", 20, "mandatory"),
    ("Arvenia", "maize_flour", "zinc", 30, "mandatory"),
    ("Arvenia", "oil", "vitamin_a", 11, "mandatory"),
    ("Caldria", "wheat_flour", "iron", 20, "mandatory"),
    ("Caldria", "wheat_flour", "folate", 1.5, "mandatory"),
    ("Caldria", "wheat_flour", "vitamin_b12", 0.01, "mandatory"),
    ("Caldria", "rice", "iron", 28, "mandatory"),
    ("Caldria", "rice", "zinc", 40, "voluntary"),
    ("Dunmark", "oil", "vitamin_a", 15, "mandatory"),
    ("Dunmark", "wheat_flour", "iron", 15, "voluntary"),
    ("Esteva", "wheat_flour", "iron", 55, "mandatory"),
    ("Esteva", "wheat_flour", "thiamin", 6.3, "mandatory"),
    ("Esteva", "wheat_flour", "riboflavin", 4.2, "mandatory"),
    ("Esteva", "wheat_flour", "niacin", 55, "mandatory"),
    ("Esteva", "wheat_flour", "folate", 2.2, "mandatory"),
    ("Esteva", "maize_flour", "iron", 50, "mandatory"),
    ("Esteva", "maize_flour", "zinc", 40, "mandatory"),
    ("Esteva", "maize_flour", "niacin", 40, "mandatory"),
    ("Fenwick", "wheat_flour", "calcium", 1500, "mandatory"),
    ("Fenwick", "wheat_flour", "iron", 44, "mandatory"),
    ("Fenwick", "wheat_flour", "niacin", 35, "mandatory"),
    ("Fenwick", "rice", "iron", 12, "mandatory"),
    ("Fenwick", "rice", "zinc", 30, "mandatory"),
    ("Fenwick", "rice", "vitamin_a", 2, "voluntary"),
]

PREMIX = [
    ("Arvenia", "wheat_flour", 0.015),
    ("Arvenia", "maize_flour", 0.012),
    ("Arvenia", "oil", 0.005),
    ("Caldria", "wheat_flour", 0.01),
    ("Caldria", "rice", 0.02),
    ("Dunmark", "wheat_flour", 0.008),
    ("Dunmark", "oil", 0.004),
    ("Esteva", "wheat_flour", 0.02),
    ("Esteva", "maize_flour", 0.018),
    ("Fenwick", "wheat_flour", 0.016),
    ("Fenwick", "rice", 0.006),
]

# Mean yearly supply (kcal/capita/day) per SUA group.
SUA_MEANS = {
    "Arvenia": (1250, 70, 45, 160, 130),
    "Bellora": (1300, 90, 40, 120, 110),
    "Caldria": (1350, 60, 60, 150, 170),
    "Dunmark": (1200, 75, 70, 130, 200),
    "Esteva": (1050, 110, 50, 140, 330),
    "Fenwick": (1100, 120, 45, 110, 360),
}
SUA_GROUPS = [SS, FR, VE, LNS, ASF]

HDB = {"reference_energy_kcal": 2330.0,
       "targets_kcal": {SS: 1160.0, "fruits_vegetables": 270.0, LNS: 300.0, ASF: 300.0, OF: 300.0}}

BANDS = [(4, 6), (7, 9), (10, 12), (13, 15), (16, 17), (18, 29), (30, 49), (50, 69), (70, 99)]
ENERGY = {"male": [1400, 1750, 2150, 2650, 2900, 2700, 2600, 2400, 2150],
          "female": [1300, 1600, 1950, 2250, 2300, 2150, 2100, 1950, 1750]}

# Lower bounds per age band: (male, female) when sex-specific, else one list.
LOWER = {
    "calcium": [800, 1000, 1300, 1300, 1300, 1000, 1000, 1100, 1200],
    "iron": ([10, 10, 8, 11, 11, 8, 8, 8, 8], [10, 10, 8, 15, 15, 18, 18, 8, 8]),
    "zinc": ([5, 5, 8, 11, 11, 11, 11, 11, 11], [5, 5, 8, 9, 9, 8, 8, 8, 8]),
    "folate": [200, 200, 300, 400, 400, 400, 400, 400, 400],
    "vitamin_a": ([400, 400, 600, 900, 900, 900, 900, 900, 900], [400, 400, 600, 700, 700, 700, 700, 700, 700]),
    "vitamin_c": ([25, 25, 45, 75, 75, 90, 90, 90, 90], [25, 25, 45, 65, 65, 75, 75, 75, 75]),
    "thiamin": ([0.6, 0.6, 0.9, 1.2, 1.2, 1.2, 1.2, 1.2, 1.2], [0.6, 0.6, 0.9, 1.0, 1.0, 1.1, 1.1, 1.1, 1.1]),
    "riboflavin": ([0.6, 0.6, 0.9, 1.3, 1.3, 1.3, 1.3, 1.3, 1.3], [0.6, 0.6, 0.9, 1.0, 1.0, 1.1, 1.1, 1.1, 1.1]),
    "niacin": ([8, 8, 12, 16, 16, 16, 16, 16, 16], [8, 8, 12, 14, 14, 14, 14, 14, 14]),
    "vitamin_b6": ([0.6, 0.6, 1.0, 1.3, 1.3, 1.3, 1.3, 1.7, 1.7], [0.6, 0.6, 1.0, 1.2, 1.2, 1.3, 1.3, 1.5, 1.5]),
    "vitamin_b12": [1.2, 1.2, 1.8, 2.4, 2.4, 2.4, 2.4, 2.4, 2.4],
    "magnesium": ([130, 130, 240, 410, 410, 400, 420, 420, 420], [130, 130, 240, 360, 360, 310, 320, 320, 320]),
    "phosphorus": [500, 500, 1250, 1250, 1250, 700, 700, 700, 700],
    "selenium": [30, 30, 40, 55, 55, 55, 55, 55, 55],
    "copper": [0.44, 0.44, 0.7, 0.89, 0.89, 0.9, 0.9, 0.9, 0.9],
    "vitamin_e": [6, 6, 9, 12, 12, 12, 12, 12, 12],
    "choline": ([200, 200, 300, 400, 400, 400, 400, 400, 400], [200, 200, 300, 340, 340, 340, 340, 340, 340]),
    "vitamin_b5": [3, 3, 4, 5, 5, 5, 5, 5, 5],
}
UPPER = {
    "calcium": [2500, 2500, 3000, 3000, 3000, 2500, 2500, 2000, 2000],
    "iron": [40, 40, 40, 45, 45, 45, 45, 45, 45],
    "zinc": [12, 12, 23, 34, 34, 40, 40, 40, 40],
    "retinol": [900, 900, 1700, 2800, 2800, 3000, 3000, 3000, 3000],
    "vitamin_c": [650, 650, 1200, 1800, 1800, 2000, 2000, 2000, 2000],
    "niacin": [15, 15, 20, 30, 30, 35, 35, 35, 35],
    "phosphorus": [3000, 3000, 4000, 4000, 4000, 4000, 4000, 3000, 3000],
    "selenium": [150, 150, 280, 400, 400, 400, 400, 400, 400],
    "copper": [3, 3, 5, 8, 8, 10, 10, 10, 10],
    "sodium": [1900, 1900, 2200, 2300, 2300, 2300, 2300, 2300, 2300],
}
MANGANESE = ([1.5, 1.5, 1.9, 2.2, 2.2, 2.3, 2.3, 2.3, 2.3], [1.5, 1.5, 1.6, 1.6, 1.6, 1.8, 1.8, 1.8, 1.8],
             [3, 3, 6, 9, 9, 11, 11, 11, 11])
# Pregnant and lactating overrides: (status, age band, energy, lower-bound changes).
MATERNAL = [
    ("preg", "pregnant", (14, 17), 2450, 4),
    ("preg", "pregnant", (18, 49), 2450, 6),
    ("lact", "lactating", (14, 17), 2650, 4),
    ("lact", "lactating", (18, 49), 2650, 6),
]
MATERNAL_LOWER = {
    "pregnant": {"iron": 27, "zinc": 11, "folate": 600, "vitamin_a": 770, "vitamin_c": 85, "thiamin": 1.4,
                 "riboflavin": 1.4, "niacin": 18, "vitamin_b6": 1.9, "vitamin_b12": 2.6, "magnesium": 350,
                 "selenium": 60, "copper": 1.0, "choline": 360, "vitamin_b5": 6},
    "lactating": {"iron": 9, "zinc": 12, "folate": 500, "vitamin_a": 1300, "vitamin_c": 120, "thiamin": 1.4,
                  "riboflavin": 1.6, "niacin": 17, "vitamin_b6": 2.0, "vitamin_b12": 2.8, "magnesium": 310,
                  "selenium": 70, "copper": 1.3, "choline": 420, "vitamin_b5": 7, "vitamin_e": 16},
}


def fmt(v):
    """Shortest round-trip text, integers without a fractional part."""
    if v is None:
        return ""
    v = float(v)
    if v == 0:
        return "0"
    if v == int(v) and abs(v) < 1e15:
        return str(int(v))
    return repr(v)


def pick(table, sex, band):
    v = table
    if isinstance(v, tuple):
        v = v[0] if sex == "male" else v[1]
    return v[band]


def requirement_rows(gid, sex, band, energy, status=None):
    rows = [(gid, "energy", "target", None, None, energy, "kcal"),
            (gid, "protein", "range", round(energy * 0.10 / 4, 2), round(energy * 0.35 / 4, 2), None, "g"),
            (gid, "lipids", "range", round(energy * 0.20 / 9, 2), round(energy * 0.35 / 9, 2), None, "g"),
            (gid, "carbohydrate", "range", round(energy * 0.45 / 4, 2), round(energy * 0.65 / 4, 2), None, "g")]
    units = dict(NUTRIENTS)
    lower = {n: pick(t, sex, band) for n, t in LOWER.items()}
    if status:
        lower.update(MATERNAL_LOWER[status])
    upper = {n: t[band] for n, t in UPPER.items()}
    for n, _ in NUTRIENTS[4:]:
        lo, hi = lower.get(n), upper.get(n)
        if n == "manganese":
            lo = MANGANESE[0][band] if sex == "male" else MANGANESE[1][band]
            hi = MANGANESE[2][band]
        if lo is not None and hi is not None:
            rows.append((gid, n, "range", lo, hi, None, units[n]))
        elif lo is not None:
            rows.append((gid, n, "lower", lo, None, None, units[n]))
        elif hi is not None:
            rows.append((gid, n, "upper", None, hi, None, units[n]))
    return rows


def write_csv(path, header, rows):
    with open(path, "w", newline="", encoding="utf-8") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(header)
        for r in rows:
            w.writerow([fmt(c) if isinstance(c, (int, float)) and not isinstance(c, bool) or c is None else c
                        for c in r])


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("out", type=pathlib.Path)
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    rng = random.Random(SEED)

    # foods.csv
    header = ["country", "item_id", "name", "group", "vehicle", "bread", "price_ppp_100g"]
    header += [f"{k}_{u}" for k, u in NUTRIENTS]
    rows = []
    for country, _, mult in sorted(COUNTRIES):
        optional = [f for f in FOODS if f[3] is None and f[0] not in ("bread_white", "milk", "vegetable_oil")]
        dropped = set(x[0] for x in rng.sample(optional, rng.randint(3, 7)))
        for fid, name, group, vehicle, bread, price, p, fat, carb, micros in FOODS:
            if fid in dropped:
                continue
            noisy = round(price * mult * math.exp(rng.gauss(0.0, 0.25)), 3)
            energy = round(4 * p + 9 * fat + 4 * carb, 1)
            rows.append([country, fid, name, group, vehicle or "", str(bread), max(noisy, 0.005), energy, p, fat,
                         carb] + micros)
    write_csv(args.out / "foods.csv", header, rows)

    # subgroups.csv and requirements.csv
    groups, reqs = [], []
    for sex in ("male", "female"):
        for b, (lo, hi) in enumerate(BANDS):
            gid = f"{sex[0]}{lo}_{hi}"
            e = ENERGY[sex][b]
            groups.append([gid, sex, lo, hi, "none", e])
            reqs += requirement_rows(gid, sex, b, e)
    for tag, status, (lo, hi), e, band in MATERNAL:
        gid = f"{tag}_{lo}"
        groups.append([gid, "female", lo, hi, status, e])
        reqs += requirement_rows(gid, "female", band, e, status)
    write_csv(args.out / "subgroups.csv",
              ["subgroup", "sex", "age_min_years", "age_max_years", "status", "energy_kcal_day"], groups)
    write_csv(args.out / "requirements.csv", ["subgroup", "nutrient", "kind", "lower", "upper", "target", "unit"],
              reqs)

    write_csv(args.out / "standards.csv", ["country", "vehicle", "nutrient", "level", "unit", "status"],
              [(c, v, n, lvl, "mg/kg", st) for c, v, n, lvl, st in STANDARDS])
    write_csv(args.out / "premix.csv", ["country", "vehicle", "cost_ppp_kg"], PREMIX)

    sua = []
    for country in sorted(SUA_MEANS):
        for g, mean in zip(SUA_GROUPS, SUA_MEANS[country]):
            trend = rng.uniform(-0.01, 0.015)
            for year in range(2010, 2023):
                v = mean * (1 + trend * (year - 2016)) * math.exp(rng.gauss(0.0, 0.04))
                sua.append((country, g, year, round(v, 1)))
    write_csv(args.out / "sua.csv", ["country", "group", "year", "kcal_capita_day"], sua)
    write_csv(args.out / "regions.csv", ["country", "region"], sorted((c, r) for c, r, _ in COUNTRIES))

    config = {"hdb": HDB, "sua_rescale_by_energy": True}
    (args.out / "config.json").write_text(json.dumps(config, indent=2, sort_keys=True) + "\n", encoding="utf-8")


if __name__ == "__main__":
    main()
