#!/usr/bin/env python3
"""
fusionframe startup script
의존성을 확인한 뒤 명령행 도구로 인자를 넘기는 스크립트

    python start.py tighten --d 3 --ranks 1,1,2 --field real
"""

import sys

def check_dependencies():
    """필요한 의존성 확인"""
    required_packages = [
        ('numpy', 'numpy'),
        ('scipy', 'scipy'),
        ('pydantic', 'pydantic'),
        ('pydantic-settings', 'pydantic_settings'),
        ('python-dotenv', 'dotenv'),
        ('PyYAML', 'yaml'),
        ('tqdm', 'tqdm'),
        ('psutil', 'psutil'),
    ]

    missing_packages = []
    for package_name, import_name in required_packages:
        try:
            __import__(import_name)
        except ImportError:
            missing_packages.append(package_name)

    if missing_packages:
        print(f"❌ 누락된 패키지: {', '.join(missing_packages)}")
        print("다음 명령어로 설치하세요:")
        print("pip install -r requirements.txt")
        return False
    return True

def main():
    if not check_dependencies():
        return 2

    from fusionframe.cli.main import main as cli_main
    return cli_main(sys.argv[1:])

if __name__ == "__main__":
    sys.exit(main())
