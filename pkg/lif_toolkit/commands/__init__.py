from .series_cmd import cmd_coeffs, cmd_inverse
from .lif_cmd import cmd_lif_functional, cmd_lif_sj
from .verify_cmd import cmd_verify
from .gallery_cmd import cmd_gallery
