"""
-*- coding: utf-8 -*-
@FileName: __main__.py
@DateTime: 2025/10/18
@Docs: python -m gyrokit 入口
"""

from gyrokit.cli import main

if __name__ == "__main__":
    main()
