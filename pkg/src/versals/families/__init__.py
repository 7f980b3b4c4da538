from .generators import gen_binary_star, gen_c4, gen_cosingletons, gen_singletons, gen_star
from .recognize import classify, is_flag, is_star, pole_report, poles
