# -*- coding: utf-8 -*-
from geocomm.cli import main

if __name__ == "__main__":
    main()
