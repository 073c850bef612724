# The same relation with a < b. Completion gives three rules.
letters: a b
relation: abab^2ab = b
