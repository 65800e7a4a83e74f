#include "fock/bundled.hpp"

namespace fock {
namespace {

// Reference survey dataset: four concept pairs, 24 exemplars each.
// Marginal weights were collected on a 7-point scale from 80 respondents,
// conjunction weights from 40; every value is a multiple of 1/160.
struct WeightRowData {
  const char* pair_id;
  const char* exemplar;
  double mu_a, mu_b, mu_not_b, mu_a_and_b, mu_a_and_not_b;
};

constexpr WeightRowData kWeightRows[] = {
    // Home Furnishing / Furniture
    {"pair1", "Mantelpiece", 0.9, 0.6125, 0.5, 0.7125, 0.75},
    {"pair1", "Window Seat", 0.5, 0.48125, 0.55, 0.45, 0.4875},
    {"pair1", "Painting", 0.8, 0.4875, 0.64375, 0.6375, 0.6},
    {"pair1", "Light Fixture", 0.875, 0.6, 0.5125, 0.725, 0.625},
    {"pair1", "Kitchen Counter", 0.66875, 0.4875, 0.61875, 0.55, 0.5375},
    {"pair1", "Bath Tub", 0.725, 0.5125, 0.4625, 0.5875, 0.5875},
    {"pair1", "Deck Chair", 0.73125, 0.9, 0.2, 0.7375, 0.4125},
    {"pair1", "Shelves", 0.85, 0.93125, 0.125, 0.8375, 0.3875},
    {"pair1", "Rug", 0.89375, 0.575, 0.60625, 0.7, 0.675},
    {"pair1", "Bed", 0.75625, 0.925, 0.10625, 0.7875, 0.3625},
    {"pair1", "Wall-Hangings", 0.86875, 0.4625, 0.68125, 0.55, 0.7125},
    {"pair1", "Space Rack", 0.375, 0.425, 0.61875, 0.4125, 0.4875},
    {"pair1", "Ashtray", 0.74375, 0.4, 0.6375, 0.4875, 0.6},
    {"pair1", "Bar", 0.71875, 0.625, 0.50625, 0.6125, 0.6125},
    {"pair1", "Lamp", 0.94375, 0.64375, 0.4875, 0.75, 0.7},
    {"pair1", "Wall Mirror", 0.9125, 0.75625, 0.45, 0.825, 0.6625},
    {"pair1", "Door Bell", 0.75, 0.33125, 0.7875, 0.5, 0.6375},
    {"pair1", "Hammock", 0.61875, 0.6625, 0.40625, 0.6, 0.5},
    {"pair1", "Desk", 0.78125, 0.95, 0.0875, 0.775, 0.325},
    {"pair1", "Refrigerator", 0.74375, 0.725, 0.40625, 0.6625, 0.55},
    {"pair1", "Park Bench", 0.53125, 0.6625, 0.45625, 0.55, 0.2875},
    {"pair1", "Waste Paper Basket", 0.69375, 0.54375, 0.63125, 0.5875, 0.4125},
    {"pair1", "Sculpture", 0.825, 0.4625, 0.65625, 0.575, 0.725},
    {"pair1", "Sink Unit", 0.70625, 0.56875, 0.575, 0.6, 0.5625},
    // Spices / Herbs
    {"pair2", "Molasses", 0.3625, 0.13125, 0.8375, 0.2375, 0.5375},
    {"pair2", "Salt", 0.66875, 0.04375, 0.91875, 0.2375, 0.6875},
    {"pair2", "Peppermint", 0.66875, 0.925, 0.1, 0.7, 0.375},
    {"pair2", "Curry", 0.9625, 0.28125, 0.775, 0.5375, 0.875},
    {"pair2", "Oregano", 0.8125, 0.85625, 0.125, 0.7875, 0.4},
    {"pair2", "MSG", 0.44375, 0.11875, 0.85, 0.225, 0.575},
    {"pair2", "Chili Pepper", 0.975, 0.53125, 0.5625, 0.8, 0.9},
    {"pair2", "Mustard", 0.65, 0.275, 0.70625, 0.4875, 0.65},
    {"pair2", "Mint", 0.64375, 0.95625, 0.0875, 0.7875, 0.3125},
    {"pair2", "Cinnamon", 1.0, 0.49375, 0.5125, 0.6875, 0.7875},
    {"pair2", "Parsley", 0.5375, 0.9, 0.0875, 0.675, 0.2625},
    {"pair2", "Saccarin", 0.34375, 0.1375, 0.875, 0.2375, 0.5375},
    {"pair2", "Poppy Seeds", 0.81875, 0.46875, 0.5375, 0.5875, 0.6625},
    {"pair2", "Pepper", 0.99375, 0.46875, 0.58125, 0.7, 0.9},
    {"pair2", "Turmeric", 0.88125, 0.525, 0.43125, 0.7375, 0.6875},
    {"pair2", "Sugar", 0.45, 0.34375, 0.76875, 0.35, 0.5625},
    {"pair2", "Vinegar", 0.3, 0.10625, 0.88125, 0.15, 0.4125},
    {"pair2", "Sesame Seeds", 0.8, 0.4875, 0.5875, 0.5875, 0.7},
    {"pair2", "Lemon Juice", 0.275, 0.2, 0.80625, 0.15, 0.425},
    {"pair2", "Chocolate", 0.26875, 0.2125, 0.8, 0.2, 0.4625},
    {"pair2", "Horseradish", 0.6125, 0.66875, 0.28125, 0.6125, 0.4},
    {"pair2", "Vanilla", 0.7625, 0.5125, 0.4875, 0.625, 0.6125},
    {"pair2", "Chives", 0.6625, 0.8875, 0.25625, 0.7625, 0.275},
    {"pair2", "Root Ginger", 0.84375, 0.5625, 0.44375, 0.6875, 0.5875},
    // Pets / Farmyard Animals
    {"pair3", "Goldfish", 0.925, 0.16875, 0.8125, 0.425, 0.9125},
    {"pair3", "Robin", 0.275, 0.3625, 0.6375, 0.3125, 0.35},
    {"pair3", "Blue-tit", 0.25, 0.3125, 0.7125, 0.175, 0.3875},
    {"pair3", "Collie Dog", 0.95, 0.76875, 0.35, 0.8625, 0.5625},
    {"pair3", "Camel", 0.15625, 0.25625, 0.75, 0.2, 0.3125},
    {"pair3", "Squirrel", 0.3, 0.39375, 0.65, 0.275, 0.2625},
    {"pair3", "Guide Dog for Blind", 0.925, 0.325, 0.69375, 0.55, 0.725},
    {"pair3", "Spider", 0.3125, 0.3875, 0.63125, 0.3125, 0.3125},
    {"pair3", "Homing Pigeon", 0.40625, 0.70625, 0.3375, 0.5625, 0.25},
    {"pair3", "Monkey", 0.39375, 0.175, 0.79375, 0.2, 0.4875},
    {"pair3", "Circus Horse", 0.3, 0.48125, 0.6, 0.3375, 0.35},
    {"pair3", "Prize Bull", 0.13125, 0.7625, 0.2625, 0.425, 0.275},
    {"pair3", "Rat", 0.2, 0.35625, 0.675, 0.2125, 0.275},
    {"pair3", "Badger", 0.1625, 0.275, 0.73125, 0.1375, 0.2625},
    {"pair3", "Siamese Cat", 0.9875, 0.5, 0.525, 0.7375, 0.75},
    {"pair3", "Race Horse", 0.2875, 0.7, 0.3875, 0.5125, 0.3125},
    {"pair3", "Fox", 0.13125, 0.3, 0.68125, 0.175, 0.2875},
    {"pair3", "Donkey", 0.2875, 0.9, 0.15, 0.5625, 0.175},
    {"pair3", "Field Mouse", 0.1625, 0.40625, 0.5875, 0.225, 0.2375},
    {"pair3", "Ginger Tom-cat", 0.81875, 0.50625, 0.54375, 0.5875, 0.575},
    {"pair3", "Husky in Slead Team", 0.64375, 0.50625, 0.525, 0.5625, 0.5125},
    {"pair3", "Cart Horse", 0.26875, 0.8625, 0.15, 0.525, 0.2},
    {"pair3", "Chicken", 0.23125, 0.95, 0.0625, 0.575, 0.1125},
    {"pair3", "Doberman Guard Dog", 0.88125, 0.75625, 0.26875, 0.8, 0.55},
    // Fruits / Vegetables
    {"pair4", "Apple", 1.0, 0.225, 0.81875, 0.6, 0.8875},
    {"pair4", "Parsley", 0.01875, 0.78125, 0.25, 0.45, 0.1},
    {"pair4", "Olive", 0.53125, 0.63125, 0.44375, 0.65, 0.3375},
    {"pair4", "Chili Pepper", 0.1875, 0.73125, 0.35, 0.5125, 0.2},
    {"pair4", "Broccoli", 0.09375, 1.0, 0.0625, 0.5875, 0.0875},
    {"pair4", "Root Ginger", 0.1375, 0.7125, 0.325, 0.4625, 0.1375},
    {"pair4", "Pumpkin", 0.45, 0.775, 0.2625, 0.6625, 0.2125},
    {"pair4", "Raisin", 0.88125, 0.26875, 0.7625, 0.525, 0.75},
    {"pair4", "Acorn", 0.5875, 0.4, 0.64375, 0.4625, 0.4875},
    {"pair4", "Mustard", 0.06875, 0.3875, 0.6, 0.2875, 0.225},
    {"pair4", "Rice", 0.11875, 0.45625, 0.51875, 0.2125, 0.225},
    {"pair4", "Tomato", 0.3375, 0.8875, 0.1875, 0.7, 0.2},
    {"pair4", "Coconut", 0.925, 0.31875, 0.7, 0.5625, 0.6875},
    {"pair4", "Mushroom", 0.11875, 0.6625, 0.38125, 0.325, 0.125},
    {"pair4", "Wheat", 0.16875, 0.50625, 0.51875, 0.3375, 0.2125},
    {"pair4", "Green Pepper", 0.225, 0.6125, 0.40625, 0.4875, 0.2375},
    {"pair4", "Watercress", 0.1375, 0.7625, 0.25, 0.4875, 0.1},
    {"pair4", "Peanut", 0.61875, 0.29375, 0.75, 0.475, 0.55},
    {"pair4", "Black Pepper", 0.20625, 0.4125, 0.6125, 0.375, 0.2125},
    {"pair4", "Garlic", 0.125, 0.7875, 0.24375, 0.525, 0.1},
    {"pair4", "Yam", 0.375, 0.65625, 0.43125, 0.5875, 0.2375},
    {"pair4", "Elderberry", 0.50625, 0.39375, 0.60625, 0.45, 0.4125},
    {"pair4", "Almond", 0.7625, 0.29375, 0.71875, 0.475, 0.6125},
    {"pair4", "Lentils", 0.1125, 0.6625, 0.375, 0.375, 0.1125},
};

struct FittedRowData {
  const char* pair_id;
  const char* exemplar;
  RowKind kind;
  double theta_deg, m2, n2;
  double a1, a2, a3, b1, b2, b3;
};

// Fitted sector weights, interference angles and concept vectors for every
// row above, conjunction and negated-conjunction experiments alike. Values
// are kept exactly as published, including the handful of rows whose
// parameters fall outside the admissible range; consumers flag those rows
// instead of rejecting them.
constexpr FittedRowData kFittedRows[] = {
    // Home Furnishing / Furniture
    {"pair1", "Mantelpiece", RowKind::Conjunction, 82.84, 0.3, 0.7, 0.95, 0.0, 0.32, 0.43, 0.75, -0.62},
    {"pair1", "Mantelpiece", RowKind::ConjunctionNegation, 57.08, 0.19, 0.81, 0.95, 0.0, 0.32, 0.24, 0.67, -0.71},
    {"pair1", "Window Seat", RowKind::Conjunction, 74.75, 0.45, 0.55, 0.71, 0.0, 0.71, 0.76, 0.19, -0.69},
    {"pair1", "Window Seat", RowKind::ConjunctionNegation, 74.53, 0.44, 0.56, 0.71, 0.0, 0.71, 0.67, 0.32, -0.67},
    {"pair1", "Painting", RowKind::Conjunction, 71.12, 0.31, 0.69, 0.89, 0.0, 0.45, 0.52, 0.6, -0.72},
    {"pair1", "Painting", RowKind::ConjunctionNegation, 97.17, 0.51, 0.49, 0.89, 0.0, 0.45, 0.3, 0.74, -0.6},
    {"pair1", "Light Fixture", RowKind::Conjunction, 73.2, 0.28, 0.72, 0.94, 0.0, 0.35, 0.55, 0.74, -0.63},
    {"pair1", "Light Fixture", RowKind::ConjunctionNegation, 86.17, 0.33, 0.67, 0.94, 0.0, 0.35, 0.26, 0.67, -0.7},
    {"pair1", "Kitchen Counter", RowKind::Conjunction, 73.91, 0.39, 0.61, 0.82, 0.0, 0.58, 0.72, 0.48, -0.72},
    {"pair1", "Kitchen Counter", RowKind::ConjunctionNegation, 87.4, 0.5, 0.5, 0.82, 0.0, 0.58, 0.43, 0.66, -0.62},
    {"pair1", "Bath Tub", RowKind::Conjunction, 74.9, 0.37, 0.63, 0.85, 0.0, 0.52, 0.68, 0.57, -0.7},
    {"pair1", "Bath Tub", RowKind::ConjunctionNegation, 70.93, 0.34, 0.66, 0.85, 0.0, 0.52, 0.45, 0.51, -0.73},
    {"pair1", "Deck Chair", RowKind::Conjunction, 98.46, 0.4, 0.6, 0.86, 0.0, 0.52, 0.39, 0.93, -0.32},
    {"pair1", "Deck Chair", RowKind::ConjunctionNegation, 77.99, 0.33, 0.67, 0.52, 0.0, 0.86, 0.74, 0.51, -0.45},
    {"pair1", "Shelves", RowKind::Conjunction, 101.54, 0.42, 0.58, 0.92, 0.0, 0.39, 0.37, 0.96, -0.26},
    {"pair1", "Shelves", RowKind::ConjunctionNegation, 87.87, 0.29, 0.71, 0.39, 0.0, 0.92, 0.84, 0.41, -0.35},
    {"pair1", "Rug", RowKind::Conjunction, 79.31, 0.28, 0.72, 0.95, 0.0, 0.33, 0.46, 0.72, -0.65},
    {"pair1", "Rug", RowKind::ConjunctionNegation, 91.51, 0.34, 0.66, 0.95, 0.0, 0.33, 0.22, 0.75, -0.63},
    {"pair1", "Bed", RowKind::Conjunction, 93.14, 0.34, 0.66, 0.87, 0.0, 0.49, 0.36, 0.95, -0.27},
    {"pair1", "Bed", RowKind::ConjunctionNegation, 84.04, 0.26, 0.74, 0.49, 0.0, 0.87, 0.57, 0.75, -0.33},
    {"pair1", "Wall-Hangings", RowKind::Conjunction, 95.81, 0.37, 0.63, 0.93, 0.0, 0.36, 0.55, 0.62, -0.73},
    {"pair1", "Wall-Hangings", RowKind::ConjunctionNegation, 87.79, 0.37, 0.63, 0.93, 0.0, 0.36, 0.22, 0.8, -0.56},
    {"pair1", "Space Rack", RowKind::Conjunction, 68.21, 0.35, 0.65, 0.79, 0.0, 0.61, 0.53, 0.57, -0.65},
    {"pair1", "Space Rack", RowKind::ConjunctionNegation, 71.12, 0.39, 0.61, 0.79, 0.0, 0.61, 0.61, 0.1, -0.79},
    {"pair1", "Ashtray", RowKind::Conjunction, 82.43, 0.42, 0.58, 0.86, 0.0, 0.51, 0.63, 0.44, -0.77},
    {"pair1", "Ashtray", RowKind::ConjunctionNegation, 87.3, 0.45, 0.55, 0.86, 0.0, 0.51, 0.35, 0.72, -0.6},
    {"pair1", "Bar", RowKind::Conjunction, 80.53, 0.41, 0.59, 0.85, 0.0, 0.53, 0.51, 0.69, -0.61},
    {"pair1", "Bar", RowKind::ConjunctionNegation, 70.0, 0.34, 0.66, 0.85, 0.0, 0.53, 0.44, 0.56, -0.7},
    {"pair1", "Lamp", RowKind::Conjunction, 88.0, 0.25, 0.75, 0.97, 0.0, 0.24, 0.32, 0.79, -0.6},
    {"pair1", "Lamp", RowKind::ConjunctionNegation, 75.28, 0.2, 0.8, 0.97, 0.0, 0.24, 0.17, 0.68, -0.72},
    {"pair1", "Wall Mirror", RowKind::Conjunction, 73.68, 0.27, 0.73, 0.96, 0.0, 0.3, 0.39, 0.86, -0.49},
    {"pair1", "Wall Mirror", RowKind::ConjunctionNegation, 74.9, 0.23, 0.77, 0.96, 0.0, 0.3, 0.23, 0.63, -0.74},
    {"pair1", "Door Bell", RowKind::Conjunction, 75.7, 0.36, 0.64, 0.87, 0.0, 0.5, 0.57, 0.33, -0.82},
    {"pair1", "Door Bell", RowKind::ConjunctionNegation, 104.71, 0.61, 0.39, 0.87, 0.0, 0.5, 0.27, 0.85, -0.46},
    {"pair1", "Hammock", RowKind::Conjunction, 76.5, 0.4, 0.6, 0.79, 0.0, 0.62, 0.64, 0.67, -0.58},
    {"pair1", "Hammock", RowKind::ConjunctionNegation, 71.51, 0.4, 0.6, 0.79, 0.0, 0.62, 0.6, 0.2, -0.77},
    {"pair1", "Desk", RowKind::Conjunction, 130.06, 0.42, 0.58, 0.88, 0.0, 0.47, 0.27, 0.97, -0.22},
    {"pair1", "Desk", RowKind::ConjunctionNegation, 94.73, 0.25, 0.75, 0.47, 0.0, 0.88, 0.56, 0.77, -0.3},
    {"pair1", "Refrigerator", RowKind::Conjunction, 85.71, 0.43, 0.57, 0.86, 0.0, 0.51, 0.53, 0.79, -0.52},
    {"pair1", "Refrigerator", RowKind::ConjunctionNegation, 73.67, 0.35, 0.65, 0.86, 0.0, 0.51, 0.45, 0.45, -0.77},
    {"pair1", "Park Bench", RowKind::Conjunction, 76.77, 0.41, 0.59, 0.73, 0.0, 0.68, 0.64, 0.6, -0.58},
    {"pair1", "Park Bench", RowKind::ConjunctionNegation, 94.77, 0.79, 0.21, 0.68, 0.0, 0.73, 0.72, 0.16, -0.68},
    {"pair1", "Waste Paper Basket", RowKind::Conjunction, 74.8, 0.38, 0.62, 0.83, 0.0, 0.55, 0.54, 0.59, -0.68},
    {"pair1", "Waste Paper Basket", RowKind::ConjunctionNegation, 118.07, 0.0, 1.0, 0.83, 0.0, 0.55, 0.4, 0.68, -0.61},
    {"pair1", "Sculpture", RowKind::Conjunction, 82.95, 0.35, 0.65, 0.91, 0.0, 0.42, 0.51, 0.59, -0.73},
    {"pair1", "Sculpture", RowKind::ConjunctionNegation, 73.65, 0.32, 0.68, 0.91, 0.0, 0.42, 0.27, 0.76, -0.59},
    {"pair1", "Sink Unit", RowKind::Conjunction, 76.05, 0.38, 0.62, 0.84, 0.0, 0.54, 0.58, 0.62, -0.66},
    {"pair1", "Sink Unit", RowKind::ConjunctionNegation, 82.77, 0.44, 0.56, 0.84, 0.0, 0.54, 0.42, 0.63, -0.65},
    // Spices / Herbs
    {"pair2", "Molasses", RowKind::Conjunction, 72.46, 0.28, 0.72, 0.8, 0.0, 0.6, 0.26, 0.89, -0.36},
    {"pair2", "Molasses", RowKind::ConjunctionNegation, 81.2, 0.32, 0.68, 0.6, 0.0, 0.8, 0.53, 0.74, -0.4},
    {"pair2", "Salt", RowKind::Conjunction, 113.97, 0.19, 0.81, 0.58, 0.0, 0.82, 0.22, 0.93, -0.21},
    {"pair2", "Salt", RowKind::ConjunctionNegation, 110.36, 0.4, 0.6, 0.82, 0.0, 0.58, 0.2, 0.94, -0.29},
    {"pair2", "Peppermint", RowKind::Conjunction, 107.92, 0.37, 0.63, 0.82, 0.0, 0.58, 0.41, 0.94, -0.27},
    {"pair2", "Peppermint", RowKind::ConjunctionNegation, 72.08, 0.22, 0.78, 0.58, 0.0, 0.82, 0.45, 0.84, -0.32},
    {"pair2", "Curry", RowKind::Conjunction, 100.93, 0.17, 0.83, 0.98, 0.0, 0.19, 0.36, 0.5, -0.85},
    {"pair2", "Curry", RowKind::ConjunctionNegation, 66.1, 0.19, 0.81, 0.98, 0.0, 0.19, 0.09, 0.88, -0.47},
    {"pair2", "Oregano", RowKind::Conjunction, 86.59, 0.38, 0.62, 0.9, 0.0, 0.43, 0.6, 0.91, -0.38},
    {"pair2", "Oregano", RowKind::ConjunctionNegation, 82.46, 0.27, 0.73, 0.43, 0.0, 0.9, 0.74, 0.58, -0.35},
    {"pair2", "MSG", RowKind::Conjunction, 84.18, 0.32, 0.68, 0.75, 0.0, 0.67, 0.27, 0.89, -0.34},
    {"pair2", "MSG", RowKind::ConjunctionNegation, 84.41, 0.34, 0.66, 0.67, 0.0, 0.75, 0.43, 0.81, -0.39},
    {"pair2", "Chili Pepper", RowKind::Conjunction, 44.34, 0.1, 0.9, 0.99, 0.0, 0.16, 0.31, 0.72, -0.68},
    {"pair2", "Chili Pepper", RowKind::ConjunctionNegation, 0.0, 0.0, 1.03, 0.99, 0.0, 0.16, 0.11, 0.74, -0.66},
    {"pair2", "Mustard", RowKind::Conjunction, 66.61, 0.32, 0.68, 0.59, 0.0, 0.81, 0.62, 0.46, -0.52},
    {"pair2", "Mustard", RowKind::ConjunctionNegation, 75.03, 0.37, 0.63, 0.81, 0.0, 0.59, 0.4, 0.74, -0.54},
    {"pair2", "Mint", RowKind::Conjunction, 75.75, 0.2, 0.8, 0.8, 0.0, 0.6, 0.37, 0.97, -0.21},
    {"pair2", "Mint", RowKind::ConjunctionNegation, 82.93, 0.24, 0.76, 0.6, 0.0, 0.8, 0.4, 0.87, -0.3},
    {"pair2", "Cinnamon", RowKind::Conjunction, 0.0, 0.23, 0.77, 1.0, 0.0, 0.0, 0.0, 0.7, -0.71},
    {"pair2", "Cinnamon", RowKind::ConjunctionNegation, 8.65, 0.0, 1.0, 1.0, 0.0, 0.0, 0.0, 0.72, -0.7},
    {"pair2", "Parsley", RowKind::Conjunction, 81.74, 0.28, 0.72, 0.73, 0.0, 0.68, 0.51, 0.9, -0.32},
    {"pair2", "Parsley", RowKind::ConjunctionNegation, 83.33, 0.26, 0.74, 0.68, 0.0, 0.73, 0.32, 0.9, -0.3},
    {"pair2", "Saccarin", RowKind::Conjunction, 70.82, 0.28, 0.72, 0.81, 0.0, 0.59, 0.24, 0.89, -0.37},
    {"pair2", "Saccarin", RowKind::ConjunctionNegation, 84.53, 0.3, 0.7, 0.59, 0.0, 0.81, 0.49, 0.8, -0.35},
    {"pair2", "Poppy Seeds", RowKind::Conjunction, 80.44, 0.35, 0.65, 0.9, 0.0, 0.43, 0.59, 0.59, -0.73},
    {"pair2", "Poppy Seeds", RowKind::ConjunctionNegation, 73.09, 0.31, 0.69, 0.9, 0.0, 0.43, 0.32, 0.66, -0.68},
    {"pair2", "Pepper", RowKind::Conjunction, 102.84, 0.07, 0.93, 1.0, 0.0, 0.08, 0.16, 0.68, -0.73},
    {"pair2", "Pepper", RowKind::ConjunctionNegation, 0.0, 0.0, 1.0, 1.0, 0.0, 0.08, 0.05, 0.76, -0.65},
    {"pair2", "Turmeric", RowKind::Conjunction, 61.68, 0.22, 0.78, 0.94, 0.0, 0.34, 0.52, 0.68, -0.69},
    {"pair2", "Turmeric", RowKind::ConjunctionNegation, 63.09, 0.22, 0.78, 0.94, 0.0, 0.34, 0.28, 0.6, -0.75},
    {"pair2", "Sugar", RowKind::Conjunction, 76.84, 0.41, 0.59, 0.74, 0.0, 0.67, 0.49, 0.61, -0.59},
    {"pair2", "Sugar", RowKind::ConjunctionNegation, 77.55, 0.36, 0.64, 0.67, 0.0, 0.74, 0.53, 0.7, -0.48},
    {"pair2", "Vinegar", RowKind::Conjunction, 87.31, 0.34, 0.66, 0.84, 0.0, 0.55, 0.2, 0.92, -0.33},
    {"pair2", "Vinegar", RowKind::ConjunctionNegation, 108.16, 0.37, 0.63, 0.55, 0.0, 0.84, 0.53, 0.78, -0.34},
    {"pair2", "Sesame Seeds", RowKind::Conjunction, 80.12, 0.36, 0.64, 0.89, 0.0, 0.45, 0.6, 0.6, -0.72},
    {"pair2", "Sesame Seeds", RowKind::ConjunctionNegation, 68.75, 0.3, 0.7, 0.89, 0.0, 0.45, 0.32, 0.7, -0.64},
    {"pair2", "Lemon Juice", RowKind::Conjunction, 91.91, 0.46, 0.54, 0.85, 0.0, 0.52, 0.26, 0.85, -0.45},
    {"pair2", "Lemon Juice", RowKind::ConjunctionNegation, 87.97, 0.39, 0.61, 0.52, 0.0, 0.85, 0.71, 0.54, -0.44},
    {"pair2", "Chocolate", RowKind::Conjunction, 79.79, 0.37, 0.63, 0.86, 0.0, 0.52, 0.27, 0.84, -0.46},
    {"pair2", "Chocolate", RowKind::ConjunctionNegation, 80.83, 0.35, 0.65, 0.52, 0.0, 0.86, 0.74, 0.51, -0.45},
    {"pair2", "Horseradish", RowKind::Conjunction, 74.5, 0.38, 0.62, 0.78, 0.0, 0.62, 0.63, 0.68, -0.58},
    {"pair2", "Horseradish", RowKind::ConjunctionNegation, 76.48, 0.39, 0.61, 0.62, 0.0, 0.78, 0.67, 0.52, -0.53},
    {"pair2", "Vanilla", RowKind::Conjunction, 72.11, 0.33, 0.67, 0.87, 0.0, 0.49, 0.58, 0.6, -0.7},
    {"pair2", "Vanilla", RowKind::ConjunctionNegation, 72.05, 0.33, 0.67, 0.87, 0.0, 0.49, 0.4, 0.57, -0.72},
    {"pair2", "Chives", RowKind::Conjunction, 73.68, 0.28, 0.72, 0.81, 0.0, 0.58, 0.35, 0.91, -0.34},
    {"pair2", "Chives", RowKind::ConjunctionNegation, 96.58, 0.57, 0.43, 0.58, 0.0, 0.81, 0.71, 0.49, -0.51},
    {"pair2", "Root Ginger", RowKind::Conjunction, 73.43, 0.3, 0.7, 0.92, 0.0, 0.4, 0.55, 0.69, -0.66},
    {"pair2", "Root Ginger", RowKind::ConjunctionNegation, 81.0, 0.32, 0.68, 0.92, 0.0, 0.4, 0.32, 0.58, -0.75},
    // Pets / Farmyard Animals
    {"pair3", "Goldfish", RowKind::Conjunction, 99.22, 0.23, 0.77, 0.96, 0.0, 0.27, 0.38, 0.32, -0.91},
    {"pair3", "Goldfish", RowKind::ConjunctionNegation, 48.35, 0.18, 0.82, 0.96, 0.0, 0.27, 0.12, 0.89, -0.43},
    {"pair3", "Robin", RowKind::Conjunction, 71.13, 0.34, 0.66, 0.85, 0.0, 0.52, 0.46, 0.71, -0.6},
    {"pair3", "Robin", RowKind::ConjunctionNegation, 84.7, 0.45, 0.55, 0.85, 0.0, 0.52, 0.49, 0.35, -0.8},
    {"pair3", "Blue-tit", RowKind::Conjunction, 92.34, 0.49, 0.51, 0.87, 0.0, 0.5, 0.37, 0.76, -0.56},
    {"pair3", "Blue-tit", RowKind::ConjunctionNegation, 82.83, 0.41, 0.59, 0.87, 0.0, 0.5, 0.49, 0.22, -0.84},
    {"pair3", "Collie Dog", RowKind::Conjunction, 68.33, 0.22, 0.78, 0.97, 0.0, 0.22, 0.32, 0.87, -0.48},
    {"pair3", "Collie Dog", RowKind::ConjunctionNegation, 99.04, 0.2, 0.8, 0.97, 0.0, 0.22, 0.18, 0.56, -0.81},
    {"pair3", "Camel", RowKind::Conjunction, 71.79, 0.3, 0.7, 0.92, 0.0, 0.4, 0.24, 0.83, -0.51},
    {"pair3", "Camel", RowKind::ConjunctionNegation, 94.25, 0.37, 0.63, 0.92, 0.0, 0.4, 0.37, 0.33, -0.87},
    {"pair3", "Squirrel", RowKind::Conjunction, 82.07, 0.43, 0.57, 0.84, 0.0, 0.55, 0.45, 0.66, -0.63},
    {"pair3", "Squirrel", RowKind::ConjunctionNegation, 98.76, 0.68, 0.32, 0.84, 0.0, 0.55, 0.53, 0.27, -0.81},
    {"pair3", "Guide Dog for Blind", RowKind::Conjunction, 89.47, 0.24, 0.76, 0.96, 0.0, 0.27, 0.39, 0.52, -0.82},
    {"pair3", "Guide Dog for Blind", RowKind::ConjunctionNegation, 103.83, 0.37, 0.63, 0.96, 0.0, 0.27, 0.16, 0.82, -0.55},
    {"pair3", "Spider", RowKind::Conjunction, 76.19, 0.39, 0.61, 0.83, 0.0, 0.56, 0.49, 0.66, -0.62},
    {"pair3", "Spider", RowKind::ConjunctionNegation, 91.03, 0.57, 0.43, 0.83, 0.0, 0.56, 0.54, 0.29, -0.79},
    {"pair3", "Homing Pigeon", RowKind::Conjunction, 69.14, 0.34, 0.66, 0.64, 0.0, 0.77, 0.72, 0.53, -0.54},
    {"pair3", "Homing Pigeon", RowKind::ConjunctionNegation, 89.22, 0.53, 0.47, 0.77, 0.0, 0.64, 0.48, 0.66, -0.58},
    {"pair3", "Monkey", RowKind::Conjunction, 88.75, 0.41, 0.59, 0.78, 0.0, 0.63, 0.34, 0.84, -0.42},
    {"pair3", "Monkey", RowKind::ConjunctionNegation, 87.49, 0.41, 0.59, 0.63, 0.0, 0.78, 0.56, 0.69, -0.45},
    {"pair3", "Circus Horse", RowKind::Conjunction, 78.04, 0.41, 0.59, 0.84, 0.0, 0.55, 0.55, 0.56, -0.69},
    {"pair3", "Circus Horse", RowKind::ConjunctionNegation, 83.63, 0.46, 0.54, 0.84, 0.0, 0.55, 0.51, 0.38, -0.77},
    {"pair3", "Prize Bull", RowKind::Conjunction, 73.97, 0.25, 0.75, 0.93, 0.0, 0.36, 0.54, 0.35, -0.87},
    {"pair3", "Prize Bull", RowKind::ConjunctionNegation, 45.11, 0.18, 0.82, 0.93, 0.0, 0.36, 0.2, 0.84, -0.51},
    {"pair3", "Rat", RowKind::Conjunction, 84.23, 0.4, 0.6, 0.89, 0.0, 0.45, 0.34, 0.74, -0.6},
    {"pair3", "Rat", RowKind::ConjunctionNegation, 96.25, 0.47, 0.53, 0.89, 0.0, 0.45, 0.41, 0.4, -0.82},
    {"pair3", "Badger", RowKind::Conjunction, 92.6, 0.44, 0.56, 0.92, 0.0, 0.4, 0.26, 0.82, -0.52},
    {"pair3", "Badger", RowKind::ConjunctionNegation, 102.33, 0.44, 0.56, 0.92, 0.0, 0.4, 0.38, 0.36, -0.86},
    {"pair3", "Siamese Cat", RowKind::Conjunction, 74.53, 0.1, 0.9, 0.99, 0.0, 0.11, 0.16, 0.7, -0.71},
    {"pair3", "Siamese Cat", RowKind::ConjunctionNegation, 74.65, 0.1, 0.9, 0.99, 0.0, 0.11, 0.08, 0.72, -0.69},
    {"pair3", "Race Horse", RowKind::Conjunction, 67.6, 0.33, 0.67, 0.84, 0.0, 0.54, 0.8, 0.13, -0.84},
    {"pair3", "Race Horse", RowKind::ConjunctionNegation, 74.3, 0.36, 0.64, 0.84, 0.0, 0.54, 0.4, 0.68, -0.62},
    {"pair3", "Fox", RowKind::Conjunction, 81.81, 0.34, 0.66, 0.93, 0.0, 0.36, 0.26, 0.81, -0.55},
    {"pair3", "Fox", RowKind::ConjunctionNegation, 93.4, 0.34, 0.66, 0.93, 0.0, 0.36, 0.32, 0.46, -0.83},
    {"pair3", "Donkey", RowKind::Conjunction, 76.72, 0.23, 0.77, 0.54, 0.0, 0.84, 0.56, 0.81, -0.32},
    {"pair3", "Donkey", RowKind::ConjunctionNegation, 82.16, 0.35, 0.65, 0.84, 0.0, 0.54, 0.25, 0.89, -0.39},
    {"pair3", "Field Mouse", RowKind::Conjunction, 83.36, 0.36, 0.64, 0.92, 0.0, 0.4, 0.34, 0.72, -0.64},
    {"pair3", "Field Mouse", RowKind::ConjunctionNegation, 96.42, 0.42, 0.58, 0.92, 0.0, 0.4, 0.34, 0.55, -0.77},
    {"pair3", "Ginger Tom-cat", RowKind::Conjunction, 84.52, 0.37, 0.63, 0.9, 0.0, 0.43, 0.56, 0.63, -0.7},
    {"pair3", "Ginger Tom-cat", RowKind::ConjunctionNegation, 91.68, 0.43, 0.57, 0.9, 0.0, 0.43, 0.32, 0.67, -0.68},
    {"pair3", "Husky in Slead Team", RowKind::Conjunction, 71.71, 0.38, 0.62, 0.8, 0.0, 0.6, 0.78, 0.48, -0.7},
    {"pair3", "Husky in Slead Team", RowKind::ConjunctionNegation, 80.06, 0.45, 0.55, 0.8, 0.0, 0.6, 0.51, 0.51, -0.69},
    {"pair3", "Cart Horse", RowKind::Conjunction, 77.36, 0.27, 0.73, 0.52, 0.0, 0.86, 0.67, 0.7, -0.37},
    {"pair3", "Cart Horse", RowKind::ConjunctionNegation, 72.68, 0.3, 0.7, 0.86, 0.0, 0.52, 0.23, 0.89, -0.39},
    {"pair3", "Chicken", RowKind::Conjunction, 74.57, 0.16, 0.84, 0.48, 0.0, 0.88, 0.47, 0.89, -0.22},
    {"pair3", "Chicken", RowKind::ConjunctionNegation, 86.61, 0.3, 0.7, 0.88, 0.0, 0.48, 0.14, 0.96, -0.25},
    {"pair3", "Doberman Guard Dog", RowKind::Conjunction, 76.33, 0.31, 0.69, 0.94, 0.0, 0.34, 0.36, 0.85, -0.49},
    {"pair3", "Doberman Guard Dog", RowKind::ConjunctionNegation, 74.87, 0.25, 0.75, 0.94, 0.0, 0.34, 0.31, 0.41, -0.86},
    // Fruits / Vegetables
    {"pair4", "Apple", RowKind::Conjunction, 0.0, 0.03, 0.97, 1.0, 0.0, 0.0, 0.0, 0.47, -0.88},
    {"pair4", "Apple", RowKind::ConjunctionNegation, 8.65, 0.24, 0.76, 1.0, 0.0, 0.0, 0.0, 0.9, -0.43},
    {"pair4", "Parsley", RowKind::Conjunction, 45.6, 0.07, 0.93, 0.99, 0.0, 0.14, 0.18, 0.45, -0.88},
    {"pair4", "Parsley", RowKind::ConjunctionNegation, 100.14, 0.19, 0.81, 0.99, 0.0, 0.14, 0.07, 0.86, -0.5},
    {"pair4", "Olive", RowKind::Conjunction, 60.48, 0.3, 0.7, 0.73, 0.0, 0.68, 0.69, 0.55, -0.61},
    {"pair4", "Olive", RowKind::ConjunctionNegation, 88.0, 0.62, 0.38, 0.68, 0.0, 0.73, 0.71, 0.23, -0.67},
    {"pair4", "Chili Pepper", RowKind::Conjunction, 61.75, 0.25, 0.75, 0.9, 0.0, 0.43, 0.56, 0.32, -0.86},
    {"pair4", "Chili Pepper", RowKind::ConjunctionNegation, 85.57, 0.4, 0.6, 0.9, 0.0, 0.43, 0.28, 0.75, -0.59},
    {"pair4", "Broccoli", RowKind::Conjunction, 0.0, -0.09, 1.09, 0.31, 0.0, 0.95, 0.0, 1.0, 0.0},
    {"pair4", "Broccoli", RowKind::ConjunctionNegation, 62.97, 0.24, 0.76, 0.95, 0.0, 0.31, 0.08, 0.96, -0.25},
    {"pair4", "Root Ginger", RowKind::Conjunction, 63.12, 0.22, 0.78, 0.93, 0.0, 0.37, 0.48, 0.42, -0.84},
    {"pair4", "Root Ginger", RowKind::ConjunctionNegation, 96.33, 0.43, 0.57, 0.93, 0.0, 0.37, 0.23, 0.79, -0.57},
    {"pair4", "Pumpkin", RowKind::Conjunction, 61.83, 0.27, 0.73, 0.67, 0.0, 0.74, 0.84, 0.71, -0.47},
    {"pair4", "Pumpkin", RowKind::ConjunctionNegation, 94.72, 0.55, 0.45, 0.74, 0.0, 0.67, 0.46, 0.72, -0.51},
    {"pair4", "Raisin", RowKind::Conjunction, 79.77, 0.26, 0.74, 0.94, 0.0, 0.34, 0.51, 0.41, -0.86},
    {"pair4", "Raisin", RowKind::ConjunctionNegation, 95.34, 0.42, 0.58, 0.94, 0.0, 0.34, 0.18, 0.85, -0.49},
    {"pair4", "Acorn", RowKind::Conjunction, 73.7, 0.42, 0.58, 0.64, 0.0, 0.77, 0.68, 0.17, -0.63},
    {"pair4", "Acorn", RowKind::ConjunctionNegation, 89.53, 0.55, 0.45, 0.77, 0.0, 0.64, 0.5, 0.63, -0.6},
    {"pair4", "Mustard", RowKind::Conjunction, 48.67, 0.16, 0.84, 0.97, 0.0, 0.26, 0.19, 0.76, -0.62},
    {"pair4", "Mustard", RowKind::ConjunctionNegation, 102.58, 0.26, 0.74, 0.97, 0.0, 0.26, 0.21, 0.6, -0.77},
    {"pair4", "Rice", RowKind::Conjunction, 88.8, 0.34, 0.66, 0.94, 0.0, 0.34, 0.3, 0.69, -0.68},
    {"pair4", "Rice", RowKind::ConjunctionNegation, 92.19, 0.34, 0.66, 0.94, 0.0, 0.34, 0.26, 0.64, -0.72},
    {"pair4", "Tomato", RowKind::Conjunction, 51.31, 0.17, 0.83, 0.58, 0.0, 0.81, 0.58, 0.82, -0.34},
    {"pair4", "Tomato", RowKind::ConjunctionNegation, 84.39, 0.39, 0.61, 0.81, 0.0, 0.58, 0.31, 0.85, -0.43},
    {"pair4", "Coconut", RowKind::Conjunction, 85.23, 0.23, 0.77, 0.96, 0.0, 0.27, 0.39, 0.51, -0.83},
    {"pair4", "Coconut", RowKind::ConjunctionNegation, 126.44, 0.47, 0.53, 0.96, 0.0, 0.27, 0.16, 0.82, -0.55},
    {"pair4", "Mushroom", RowKind::Conjunction, 83.53, 0.28, 0.72, 0.94, 0.0, 0.34, 0.4, 0.5, -0.81},
    {"pair4", "Mushroom", RowKind::ConjunctionNegation, 105.98, 0.45, 0.55, 0.94, 0.0, 0.34, 0.23, 0.75, -0.62},
    {"pair4", "Wheat", RowKind::Conjunction, 70.0, 0.28, 0.72, 0.91, 0.0, 0.41, 0.39, 0.63, -0.71},
    {"pair4", "Wheat", RowKind::ConjunctionNegation, 96.33, 0.44, 0.56, 0.91, 0.0, 0.41, 0.32, 0.61, -0.72},
    {"pair4", "Green Pepper", RowKind::Conjunction, 59.33, 0.26, 0.74, 0.88, 0.0, 0.47, 0.57, 0.46, -0.78},
    {"pair4", "Green Pepper", RowKind::ConjunctionNegation, 84.98, 0.42, 0.58, 0.88, 0.0, 0.47, 0.34, 0.69, -0.64},
    {"pair4", "Watercress", RowKind::Conjunction, 63.35, 0.22, 0.78, 0.93, 0.0, 0.37, 0.55, 0.34, -0.87},
    {"pair4", "Watercress", RowKind::ConjunctionNegation, 100.37, 0.48, 0.52, 0.93, 0.0, 0.37, 0.2, 0.84, -0.5},
    {"pair4", "Peanut", RowKind::Conjunction, 67.48, 0.33, 0.67, 0.62, 0.0, 0.79, 0.59, 0.48, -0.54},
    {"pair4", "Peanut", RowKind::ConjunctionNegation, 95.8, 0.55, 0.45, 0.79, 0.0, 0.62, 0.39, 0.77, -0.5},
    {"pair4", "Black Pepper", RowKind::Conjunction, 57.0, 0.24, 0.76, 0.89, 0.0, 0.45, 0.37, 0.69, -0.64},
    {"pair4", "Black Pepper", RowKind::ConjunctionNegation, 103.64, 0.57, 0.43, 0.89, 0.0, 0.45, 0.4, 0.48, -0.78},
    {"pair4", "Garlic", RowKind::Conjunction, 57.34, 0.19, 0.81, 0.94, 0.0, 0.35, 0.47, 0.32, -0.89},
    {"pair4", "Garlic", RowKind::ConjunctionNegation, 98.91, 0.45, 0.55, 0.94, 0.0, 0.35, 0.19, 0.85, -0.49},
    {"pair4", "Yam", RowKind::Conjunction, 61.08, 0.31, 0.69, 0.61, 0.0, 0.79, 0.7, 0.29, -0.59},
    {"pair4", "Yam", RowKind::ConjunctionNegation, 94.32, 0.64, 0.36, 0.79, 0.0, 0.61, 0.51, 0.56, -0.66},
    {"pair4", "Elderberry", RowKind::Conjunction, 70.0, 0.38, 0.62, 0.7, 0.0, 0.71, 0.65, 0.45, -0.63},
    {"pair4", "Elderberry", RowKind::ConjunctionNegation, 89.03, 0.59, 0.41, 0.71, 0.0, 0.7, 0.62, 0.47, -0.63},
    {"pair4", "Almond", RowKind::Conjunction, 77.45, 0.36, 0.64, 0.87, 0.0, 0.49, 0.59, 0.27, -0.84},
    {"pair4", "Almond", RowKind::ConjunctionNegation, 99.72, 0.57, 0.43, 0.87, 0.0, 0.49, 0.3, 0.79, -0.53},
    {"pair4", "Lentils", RowKind::Conjunction, 72.62, 0.24, 0.76, 0.94, 0.0, 0.34, 0.38, 0.5, -0.81},
    {"pair4", "Lentils", RowKind::ConjunctionNegation, 109.72, 0.47, 0.53, 0.94, 0.0, 0.34, 0.22, 0.76, -0.61},
};

constexpr struct {
  const char* pair_id;
  const char* concept_a;
  const char* concept_b;
} kPairs[] = {
    {"pair1", "Home Furnishing", "Furniture"},
    {"pair2", "Spices", "Herbs"},
    {"pair3", "Pets", "Farmyard Animals"},
    {"pair4", "Fruits", "Vegetables"},
};

Dataset make_dataset() {
  Dataset ds;
  for (const auto& p : kPairs) {
    ds.pairs.push_back({p.pair_id, p.concept_a, p.concept_b});
  }
  for (const auto& r : kWeightRows) {
    MembershipRow row;
    row.pair_id = r.pair_id;
    row.exemplar = r.exemplar;
    row.mu_a = MembershipWeight(r.mu_a);
    row.mu_b = MembershipWeight(r.mu_b);
    row.mu_not_b = MembershipWeight(r.mu_not_b);
    row.mu_a_and_b = MembershipWeight(r.mu_a_and_b);
    row.mu_a_and_not_b = MembershipWeight(r.mu_a_and_not_b);
    ds.rows.push_back(std::move(row));
  }
  return ds;
}

std::vector<FittedRow> make_fitted() {
  std::vector<FittedRow> out;
  out.reserve(std::size(kFittedRows));
  for (const auto& r : kFittedRows) {
    FittedRow row;
    row.pair_id = r.pair_id;
    row.exemplar = r.exemplar;
    row.kind = r.kind;
    row.theta_deg = r.theta_deg;
    row.m2 = r.m2;
    row.n2 = r.n2;
    row.vec_a = {r.a1, r.a2, r.a3};
    row.vec_b = {r.b1, r.b2, r.b3};
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

const Dataset& bundled_dataset() {
  static const Dataset ds = make_dataset();
  return ds;
}

const std::vector<FittedRow>& bundled_fitted() {
  static const std::vector<FittedRow> rows = make_fitted();
  return rows;
}

}  // namespace fock
