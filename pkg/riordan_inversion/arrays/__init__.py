# Array constructions and the inversion operator
