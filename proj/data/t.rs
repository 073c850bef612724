# T = <a, b | abab^2ab = b>, as a complete rewriting system.
letters: a b
order: b a
rule: abab^2ab -> b
rule: abab^3 -> bab^2ab
