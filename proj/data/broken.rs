letters: a b
rule: abab^2ab -> b
rule: ab?b -> b
