# S = T with an extra generator f.
letters: a b f
relation: abab^2ab = b
relation: fa = ba
relation: af = ab
relation: fb = b^2
relation: bf = b^2
relation: f^2 = b^2
