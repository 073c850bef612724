# The free monogenic semigroup.
letters: x
