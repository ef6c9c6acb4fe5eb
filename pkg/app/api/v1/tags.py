REPRESENTATION = "Representations"
INTERTWINER = "Intertwiners"
DATA = "ADHM Data"
FIELD = "Monopole Fields"
OBSERVABLE = "Observables"
UTILITY = "Utility Functions"
