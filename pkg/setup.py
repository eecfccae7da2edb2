import os.path

from setuptools import setup, find_packages

pkgname = 'dissipator_lab'
version = '0.1.0'


this_directory = os.path.abspath(os.path.dirname(__file__))
with open(os.path.join(this_directory, 'README.md'), encoding='utf-8') as f:
    long_description = f.read()


setup(name=pkgname,
      version=version,
      description='Certification and integration of the damped driven '
                  'Jaynes-Cummings dissipators',
      long_description=long_description,
      long_description_content_type='text/markdown',
      include_package_data=True,
      author='dissipator_lab developers',
      package_dir={'': 'src'},
      packages=find_packages('src'),
      python_requires=">=3.8",
      install_requires=['numpy>=1.17.0', 'scipy>=1.5.0'],
      extras_require={'demos': ['matplotlib'],
                      'test': ['pytest']},
      entry_points={'console_scripts': [
          'dissipator-lab=dissipator_lab.cli_io:main']},
      license="GPLv3",
      )
