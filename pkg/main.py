# -*- coding: utf-8 -*-
from dotenv import load_dotenv

load_dotenv()

from geocomm.cli import main

if __name__ == "__main__":
    main()
