# CubicFields
