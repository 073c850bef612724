# The defining relation of T alone; `complete` recovers t.rs.
letters: a b
order: b a
relation: abab^2ab = b
