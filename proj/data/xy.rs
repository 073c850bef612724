# y^2 = xy = yx = x^2
letters: x y
rule: y^2 -> x^2
rule: xy -> x^2
rule: yx -> x^2
